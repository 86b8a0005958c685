from gsp4_local_zeta.algebra import LaurentPoly, RationalFunction, VarId, parse_poly, rf_equal, substitute
from gsp4_local_zeta.series import TruncSeries, series_expand
from gsp4_local_zeta.sugano import CosetRep, PlaceData, SatakeData, bessel_coeff, bessel_table, build_params, sugano_C
from gsp4_local_zeta.lfactor import eigenvalues, local_lfactor, zeta_normalizer
from gsp4_local_zeta.hilbert import LocalPlace, QuadSpaceData, chi_T, classify_place, hilbert_symbol, legendre
from gsp4_local_zeta.verifier import VerifyReport, verify

__version__ = "0.1.0"
