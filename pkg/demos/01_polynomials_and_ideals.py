"""
Exact polynomials and ideals over the Gaussian rationals
=========================================================

Everything below is exact: coefficients are rationals plus i times
rationals, and Gröbner bases are computed with Buchberger's algorithm.
"""

from foliamilnor import Ideal, buchberger, local_multiplicity, parse_poly, quotient_dimension, saturate
from foliamilnor.ideal import LEX, eliminate

R = ("x", "y")

# parse, multiply, differentiate
p = parse_poly("(x + i*y)^2 - 1/2", R)
print("p          =", p)
print("p * conj   =", p * parse_poly("(x - i*y)^2 - 1/2", R))
print("dp/dx      =", p.diff("x"))

# a zero-dimensional ideal: how many solutions, counted with multiplicity?
I = Ideal(R, [parse_poly("x^2 - y", R), parse_poly("y^2 - x", R)])
G = buchberger(I)
print("\ngrevlex basis:", [str(g) for g in G.basis])
print("dim R/I =", quotient_dimension(G))  # four solutions: 0, 1 and two complex ones

# the lex basis shows the eliminant in y alone
print("lex basis:", [str(g) for g in buchberger(I, LEX).basis])
print("eliminate x:", eliminate(I, ["x"]))

# local multiplicity at the origin: the dimension of the local algebra
J = Ideal(R, [parse_poly("x^2", R), parse_poly("y^3", R)])
print("\nmultiplicity of (x^2, y^3) at 0:", local_multiplicity(J, [0, 0]))

# saturation strips components inside V(f)
K = Ideal(R, [parse_poly("x^2", R), parse_poly("x*y", R)])
print("(x^2, xy) : y^oo =", saturate(K, parse_poly("y", R)))
