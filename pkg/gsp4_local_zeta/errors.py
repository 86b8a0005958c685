class Gsp4Error(Exception):
    pass


class ResourceLimit(Gsp4Error):
    def __init__(self, terms: int, limit: int):
        super().__init__("polynomial has {} terms, above the ceiling of {}".format(terms, limit))
        self.terms = terms
        self.limit = limit


class ZeroSubstitutionIntoNegativePower(Gsp4Error):
    pass


class NonUnitDenominator(Gsp4Error):
    pass


class RamifiedPlace(Gsp4Error):
    pass


class WrongCase(Gsp4Error):
    pass


class DegenerateSplitParameter(Gsp4Error):
    pass


class ZeroArgument(Gsp4Error):
    pass
