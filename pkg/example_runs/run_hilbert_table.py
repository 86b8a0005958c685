from gsp4_local_zeta.hilbert import LocalPlace, classify_place, hilbert_symbol, solvable_oracle


############################################################################################
#
# hilbert_table
#   Prints (a, b)_p for small a, b and counts how often the closed formula and
#   the solvability search agree.
#
############################################################################################


if __name__ == "__main__":

    p = 2
    values = [-5, -3, -2, -1, 1, 2, 3, 5, 6]
    print("(a, b)_{}".format(p))
    print("      " + "".join("{:>4}".format(b) for b in values))
    agree = 0
    for a in values:
        row = []
        for b in values:
            symbol = hilbert_symbol(a, b, LocalPlace.finite(p))
            agree += (symbol == 1) == solvable_oracle(a, b, p)
            row.append("{:>4}".format(symbol))
        print("{:>4}  ".format(a) + "".join(row))
    print()
    print("formula and search agree on {}/{} pairs".format(agree, len(values) ** 2))

    for rho in (-1, 2, 5, 17):
        print("Q_{}(sqrt({})): {}".format(p, rho, {-1: "inert", 0: "ramified", 1: "split"}[classify_place(rho, p)]))
