"""Independent reference evaluator used to cross-check the production engine.

Each property is written out as literal nested loops over the cell matrix,
deliberately not sharing any code with the package's term-tree machinery.
Every function returns the lexicographically first violating assignment
(scanning x, then y, then z) or None when the property holds.
"""


def o_An(c, n, one):
    for x in range(n):
        for y in range(n):
            if c[x][y] == one and c[y][x] == one and x != y:
                return (x, y)
    return None


def o_B(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[c[y][z]][c[c[x][y]][c[x][z]]] != one:
                    return (x, y, z)
    return None


def o_BB(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[c[y][z]][c[c[z][x]][c[y][x]]] != one:
                    return (x, y, z)
    return None


def o_Star(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[y][z] == one and c[c[x][y]][c[x][z]] != one:
                    return (x, y, z)
    return None


def o_StarStar(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[y][z] == one and c[c[z][x]][c[y][x]] != one:
                    return (x, y, z)
    return None


def o_C(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[c[x][c[y][z]]][c[y][c[x][z]]] != one:
                    return (x, y, z)
    return None


def o_D(c, n, one):
    for x in range(n):
        for y in range(n):
            if c[y][c[c[y][x]][x]] != one:
                return (x, y)
    return None


def o_Ex(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[x][c[y][z]] != c[y][c[x][z]]:
                    return (x, y, z)
    return None


def o_K(c, n, one):
    for x in range(n):
        for y in range(n):
            if c[x][c[y][x]] != one:
                return (x, y)
    return None


def o_L(c, n, one):
    for x in range(n):
        if c[x][one] != one:
            return (x,)
    return None


def o_M(c, n, one):
    for x in range(n):
        if c[one][x] != x:
            return (x,)
    return None


def o_N(c, n, one):
    for x in range(n):
        if c[one][x] == one and x != one:
            return (x,)
    return None


def o_Re(c, n, one):
    for x in range(n):
        if c[x][x] != one:
            return (x,)
    return None


def o_S(c, n, one):
    for x in range(n):
        for y in range(n):
            if x == y and c[x][y] != one:
                return (x, y)
    return None


def o_Tr(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[x][y] == one and c[y][z] == one and c[x][z] != one:
                    return (x, y, z)
    return None


def o_U(c, n, one):
    for x in range(n):
        for y in range(n):
            if c[c[c[y][x]][x]][x] != c[y][x]:
                return (x, y)
    return None


def o_Pi(c, n, one):
    for x in range(n):
        for y in range(n):
            if c[y][c[y][x]] != c[y][x]:
                return (x, y)
    return None


def o_Pimpl(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[x][c[y][z]] != c[c[x][y]][c[x][z]]:
                    return (x, y, z)
    return None


def o_P1(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[c[x][c[y][z]]][c[c[x][y]][c[x][z]]] != one:
                    return (x, y, z)
    return None


def o_P2(c, n, one):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if c[c[c[x][y]][c[x][z]]][c[x][c[y][z]]] != one:
                    return (x, y, z)
    return None


CORE_ORACLE = {
    "An": o_An,
    "B": o_B,
    "BB": o_BB,
    "Star": o_Star,
    "StarStar": o_StarStar,
    "C": o_C,
    "D": o_D,
    "Ex": o_Ex,
    "K": o_K,
    "L": o_L,
    "M": o_M,
    "N": o_N,
    "Re": o_Re,
    "S": o_S,
    "Tr": o_Tr,
    "U": o_U,
    "Pi": o_Pi,
    "Pimpl": o_Pimpl,
    "P1": o_P1,
    "P2": o_P2,
}


def ob_DN(c, n, one, zero):
    for x in range(n):
        if c[c[x][zero]][zero] != x:
            return (x,)
    return None


def ob_G1(c, n, one, zero):
    for x in range(n):
        for y in range(n):
            if c[x][c[y][zero]] != c[y][c[x][zero]]:
                return (x, y)
    return None


def ob_G2(c, n, one, zero):
    for x in range(n):
        for y in range(n):
            if c[x][y] != c[c[y][zero]][c[x][zero]]:
                return (x, y)
    return None


def ob_G3(c, n, one, zero):
    for x in range(n):
        for y in range(n):
            if c[c[y][zero]][x] != c[c[x][zero]][y]:
                return (x, y)
    return None


def ob_G4(c, n, one, zero):
    for x in range(n):
        if c[x][c[c[x][zero]][zero]] != one:
            return (x,)
    return None


def ob_G5(c, n, one, zero):
    for x in range(n):
        for y in range(n):
            if c[c[x][y]][c[c[y][zero]][c[x][zero]]] != one:
                return (x, y)
    return None


def ob_G6(c, n, one, zero):
    for x in range(n):
        for y in range(n):
            if c[x][y] == one and c[c[y][zero]][c[x][zero]] != one:
                return (x, y)
    return None


def ob_G7(c, n, one, zero):
    for x in range(n):
        for y in range(n):
            if (c[x][y] == one) != (c[c[y][zero]][c[x][zero]] == one):
                return (x, y)
    return None


def ob_G8(c, n, one, zero):
    for x in range(n):
        if c[c[c[x][zero]][zero]][zero] != c[x][zero]:
            return (x,)
    return None


BOUNDED_ORACLE = {
    "DN": ob_DN,
    "G1": ob_G1,
    "G2": ob_G2,
    "G3": ob_G3,
    "G4": ob_G4,
    "G5": ob_G5,
    "G6": ob_G6,
    "G7": ob_G7,
    "G8": ob_G8,
}


def oracle_witness(table, prop_name, zero=None):
    """First violating assignment per the reference loops, or None."""
    c = table.cells
    n = table.size
    one = n - 1
    if prop_name in CORE_ORACLE:
        return CORE_ORACLE[prop_name](c, n, one)
    return BOUNDED_ORACLE[prop_name](c, n, one, zero)


def oracle_zero(table):
    """(zero, bounded) per an independent scan, or None."""
    n = table.size
    one = n - 1
    rows = [z for z in range(n) if all(v == one for v in table.cells[z])]
    if len(rows) != 1:
        return None
    return rows[0], all(table.cells[x][one] == one for x in range(n))
