from fractions import Fraction

from gsp4_local_zeta import CosetRep, PlaceData, SatakeData, bessel_coeff, bessel_table


############################################################################################
#
# print_bessel
#   Prints a small table of spherical Bessel values at an inert place, then
#   one coefficient with the Satake data left symbolic.
#
############################################################################################


def print_table(satake: SatakeData, place: PlaceData, max_ell: int, max_m: int):
    print("=============== {} place, q = {} ===============".format(place.case, place.q))
    for (ell, m), value in sorted(bessel_table(satake, place, max_ell, max_m).items()):
        print("  phi(h({}, {})) = {}".format(ell, m, value))
    print()


if __name__ == "__main__":

    satake = SatakeData.from_roots(Fraction(1, 2), 2, 3)
    print_table(satake, PlaceData.from_values(9, -1), 2, 2)
    print_table(satake, PlaceData.from_values(25, 1, 7), 2, 1)

    print(" -- symbolic --")
    print(bessel_coeff(SatakeData.symbolic(), PlaceData.symbolic(1), CosetRep(ell=1, m=0)))
