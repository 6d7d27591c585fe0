#!/usr/bin/env python3
"""Regenerates core/data/*.poly from the published factored polynomials.

The Einstein system, the x2 cofactor of f2, the substituted pair g1, g2 and
the three elimination polynomials are typed in below exactly as printed
(factored, coefficients polynomial in k and l), expanded with sympy and
written in the plain-text polynomial format read by soeinstein.

Usage: python3 tools/expand_coefficients.py [output_dir]
"""

import pathlib
import sys

from sympy import Poly, symbols

k, l, x2, x3, x12 = symbols("k l x2 x3 x12")

SYSTEM = {
    "f1": -2*k*x2*x3**2*x12**2 + l*x2**2*x3*x12**2 + k*x2**2*x3 + k*x3*x12**2 - l*x2*x12**2 + 2*x2*x12**2
          - 2*x3*x12**2,
    "f2": l*x2**2*x12**2 - l*x2*x12**3 + 3*k*x2**2 - 4*x2*x12*k + x12**2*k - 2*x2**2 + 4*x2*x12 - 2*x12**2,
    "f3": k*x2*x3 + 2*k*x3**2 + k*x3*x12 + l*x3**2 - 4*k*x3 - 2*x3*l - x2*x3 - x3**2 + l + 4*x3 - 2,
}

F2_COFACTOR = l*x2*x12**2 + 3*k*x2 - k*x12 - 2*x2 + 2*x12

SUBSTITUTED = {
    "g1": 2*k**2*l*x3**2*x12**3 - k*l**2*x3*x12**4 - 4*k*l*x3**2*x12**3 + 2*l**2*x3*x12**4
          + 6*k**3*x3**2*x12 - 7*k**2*l*x3*x12**2 + k*l**2*x12**3 - 16*k**2*x3**2*x12 + 20*k*l*x3*x12**2
          - 2*k*l*x12**3 - 2*l**2*x12**3 - 10*k**3*x3 + 3*k**2*l*x12 + 8*k*x3**2*x12 - 12*l*x3*x12**2
          + 4*l*x12**3 + 34*k**2*x3 - 6*k**2*x12 - 8*k*l*x12 - 32*k*x3 + 16*k*x12 + 4*x12*l + 8*x3 - 8*x12,
    "g2": 2*k*l*x3**2*x12**2 + k*l*x3*x12**3 + l**2*x3**2*x12**2 - 4*k*l*x3*x12**2 - 2*l**2*x3*x12**2
          - l*x3**2*x12**2 + 6*k**2*x3**2 + 4*k**2*x3*x12 + 3*k*l*x3**2 + l**2*x12**2 + 4*l*x3*x12**2
          - 12*k**2*x3 - 6*k*l*x3 - 7*k*x3**2 - 5*k*x3*x12 - 2*l*x3**2 - 2*l*x12**2 + 3*k*l + 20*k*x3
          + 4*x3*l + 2*x3**2 + 2*x12*x3 - 6*k - 2*l - 8*x3 + 4,
}

H = (
    l**2*(k+l)*(2*k**2+2*k*l+l**2-l)*x12**8
    - 2*l**2*(2*k+l-2)*(4*k**2+4*k*l+l**2-l)*x12**7
    + l*(16*k**4+76*k**3*l+71*k**2*l**2+22*k*l**3+l**4-20*k**3-119*k**2*l-81*k*l**2-16*l**3+8*k**2+51*k*l
         + 19*l**2-4*l)*x12**6
    - 4*l*(2*k+l-2)*(14*k**3+20*k**2*l+5*k*l**2-14*k**2-21*k*l-4*l**2+4*k+4*l)*x12**5
    + (32*k**5+344*k**4*l+368*k**3*l**2+117*k**2*l**3+6*k*l**4-80*k**4-842*k**3*l-686*k**2*l**2-168*k*l**3
       - 4*l**4+82*k**3+713*k**2*l+406*k*l**2+60*l**3-40*k**2-236*k*l-76*l**2+8*k+20*l)*x12**4
    - 2*(2*k+l-2)*(48*k**4+124*k**3*l+31*k**2*l**2-92*k**3-215*k**2*l-46*k*l**2+64*k**2+110*k*l+16*l**2
                   - 16*k-16*l)*x12**3
    + (448*k**5+608*k**4*l+212*k**3*l**2+9*k**2*l**3-1424*k**4-1550*k**3*l-448*k**2*l**2-12*k*l**3
       + 1714*k**3+1427*k**2*l+304*k*l**2+4*l**3-956*k**2-556*k*l-64*l**2+232*k+76*l-16)*x12**2
    - 4*(k-1)*(5*k-2)*(-2+3*k)*(2*k+l-2)*(4*k+l-1)*x12
    + 4*(5*k-2)**2*(k-1)**2*(l-1+2*k)
)

HLIN = (
    -l**2*(k+l)*(k**2+4*k*l+2*l**2-2*k-2*l)*(2*k**2+2*k*l+l**2-l)*x12**7
    + 2*l**2*(2*k+l-2)*(k**2+4*k*l+2*l**2-2*k-2*l)*(4*k**2+4*k*l+l**2-l)*x12**6
    - l*(16*k**6+120*k**5*l+357*k**4*l**2+408*k**3*l**3+206*k**2*l**4+43*k*l**5+2*l**6-52*k**5-365*k**4*l
         - 841*k**3*l**2-714*k**2*l**3-252*k*l**4-32*l**5+48*k**4+357*k**3*l+622*k**2*l**2+355*k*l**3
         + 66*l**4-16*k**3-122*k**2*l-154*k*l**2-44*l**3+8*k*l+8*l**2)*x12**5
    + 2*l*(2*k+l-2)*(28*k**5+112*k**4*l+166*k**3*l**2+90*k**2*l**3+15*k*l**4-84*k**4-254*k**3*l
                     - 278*k**2*l**2-114*k*l**3-14*l**4+64*k**3+172*k**2*l+131*k*l**2+28*l**3-16*k**2
                     - 32*k*l-14*l**2)*x12**4
    + (-32*k**7-372*k**6*l-1118*k**5*l**2-1337*k**4*l**3-710*k**3*l**4-153*k**2*l**5-7*k*l**6+144*k**6
       + 1664*k**5*l+3882*k**4*l**2+3620*k**3*l**3+1499*k**2*l**4+247*k*l**5+6*l**6-242*k**5-2641*k**4*l
       - 4816*k**3*l**2-3415*k**2*l**3-1003*k*l**4-98*l**5+204*k**4+1882*k**3*l+2625*k**2*l**2
       + 1293*k*l**3+210*l**4-88*k**3-588*k**2*l-586*k*l**2-150*l**3+16*k**2+56*k*l+32*l**2)*x12**3
    + 2*(2*k+l-2)*(48*k**6+156*k**5*l+263*k**4*l**2+162*k**3*l**3+27*k**2*l**4-188*k**5-583*k**4*l
                   - 706*k**3*l**2-342*k**2*l**3-48*k*l**4+248*k**4+688*k**3*l+631*k**2*l**2+216*k*l**3
                   + 20*l**4-144*k**3-316*k**2*l-216*k*l**2-40*l**3+32*k**2+48*k*l+20*l**2)*x12**2
    + (-368*k**7-740*k**6*l-850*k**5*l**2-513*k**4*l**3-120*k**3*l**4-3*k**2*l**5+1908*k**6+3454*k**5*l
       + 3330*k**4*l**2+1642*k**3*l**3+321*k**2*l**4+8*k*l**5-3740*k**5-5875*k**4*l-4684*k**3*l**2
       - 1787*k**2*l**3-256*k*l**4-4*l**5+3546*k**4+4678*k**3*l+2943*k**2*l**2+784*k*l**3+60*l**4
       - 1676*k**3-1786*k**2*l-800*k*l**2-116*l**3+344*k**2+280*k*l+68*l**2-16*k-8*l)*x12
    + 2*(k-1)*(k-2)*(5*k-2)*(3*k**2+2*k*l+l**2-2*k-l)*(8*k**2+4*k*l-8*k)
    + 2*(l-1)*(k-1)*(k-2)*(5*k-2)*(2*k+l-1)*(3*k**2+(2*k+l)*(l-1))*x3
)

P = (
    4*(l-1+2*k)*(2*k**2+2*k*l+l*(l-1))*(3*k**2+2*k*l+l**2-2*k-l)**2*x3**8
    - 16*(2*k+l-2)*(3*k**2+(2*k+l)*(l-1))*(3*k**4+(12*l-2)*k**3+(14*l**2-10*l)*k**2+(l**2*(8*l-10)+2*l)*k
                                          + 2*l**3*(l-2)+2*l**2)*x3**7
    + (160*k**7+(1928*l-1000)*k**6+(5492*l**2-6764*l+1408)*k**5+(7644*l**3-15830*l**2+7818*l-736)*k**4
       + (6201*l**4-18266*l**3+15881*l**2-3848*l+128)*k**3
       + (3072*l**5-11752*l**4+14848*l**3-6912*l**2+808*l)*k**2
       + (880*l**6-4208*l**5+7012*l**4-4824*l**3+1204*l**2-64*l)*k
       + 112*l**7-664*l**6+1432*l**5-1352*l**4+504*l**3-32*l**2)*x3**6
    - 4*(2*k+l-2)*((128*l-108)*k**5+(582*l**2-725*l+144)*k**4+(921*l**3-1857*l**2+800*l-48)*k**3
                   + (736*l**4-2072*l**3+1600*l**2-324*l)*k**2+(312*l**5-1152*l**4+1292*l**3-484*l**2+48*l)*k
                   + 56*l**6-268*l**5+424*l**4-252*l**3+40*l**2)*x3**5
    + ((200*l-320)*k**6+(2448*l**2-4584*l+1712)*k**5+(6812*l**3-18568*l**2+13190*l-2216)*k**4
       + (8618*l**4-32023*l**3+36747*l**2-13648*l+1056)*k**3
       + (5781*l**5-27998*l**4+45785*l**3-29060*l**2+6104*l-160)*k**2
       + (2000*l**6-12260*l**5+27136*l**4-25936*l**3+9932*l**2-1120*l)*k
       + 280*l**7-2120*l**6+6124*l**5-8336*l**4+5284*l**3-1280*l**2+64*l)*x3**4
    - (2*(l-2))*(2*k+l-2)*((128*l-108)*k**4+(582*l**2-725*l+144)*k**3+(842*l**3-1694*l**2+716*l-48)*k**2
                           + (512*l**4-1560*l**3+1232*l**2-244*l)*k+112*l**5-480*l**4+632*l**3-280*l**2
                           + 32*l)*x3**3
    + 2*(l-2)**2*(20*k**5+(241*l-125)*k**4+(659*l**2-800*l+158)*k**3+(703*l**3-1593*l**2+820*l-68)*k**2
                  + (328*l**4-1156*l**3+1168*l**2-336*l+8)*k+56*l**5-276*l**4+448*l**3-268*l**2+48*l)*x3**2
    - 2*(l-2)**3*(2*k+l-2)*(-2+3*k+2*l)*(3*k**2+2*k*(6*l-1)+4*l*(2*l-1))*x3
    + (l-2)**4*(k+l)*(-2+3*k+2*l)**2
)

FILES = [
    ("f1", SYSTEM["f1"], (x2, x3, x12, k, l), "homogeneous Einstein system, equation f1 (printed expanded)"),
    ("f2", SYSTEM["f2"], (x2, x3, x12, k, l), "homogeneous Einstein system, equation f2 (printed expanded)"),
    ("f3", SYSTEM["f3"], (x2, x3, x12, k, l), "homogeneous Einstein system, equation f3 (printed expanded)"),
    ("f2_cofactor", F2_COFACTOR, (x2, x12, k, l), "nonlinear factor of f2 = (x2 - x12) * cofactor"),
    ("g1", SUBSTITUTED["g1"], (x3, x12, k, l), "f1 after substituting the x2 closed form (printed expanded)"),
    ("g2", SUBSTITUTED["g2"], (x3, x12, k, l), "f3 after substituting the x2 closed form (printed expanded)"),
    ("h", H, (x12, k, l), "Groebner elimination polynomial h(x12), lex z > x3 > x12 (printed factored)"),
    ("hlin", HLIN, (x12, x3, k, l), "Groebner basis element linear in x3, lex z > x3 > x12 (printed factored)"),
    ("p", P, (x3, k, l), "Groebner elimination polynomial p(x3), lex z > x12 > x3 (printed factored)"),
]


def write(path, expr, gens, note):
    poly = Poly(expr.expand(), *gens)
    lines = [
        f"# provenance: {note}",
        "# provenance: expanded by tools/expand_coefficients.py; coefficients are polynomials in k and l",
        "# variables: " + " ".join(str(g) for g in gens),
    ]
    for monom, coeff in sorted(poly.terms()):
        num, den = coeff.as_numer_denom()
        lines.append(" ".join(str(e) for e in monom) + f" {num}/{den}")
    path.write_text("\n".join(lines) + "\n")


def main():
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parents[1] / "core" / "data"
    out.mkdir(parents=True, exist_ok=True)
    for name, expr, gens, note in FILES:
        write(out / f"{name}.poly", expr, gens, note)


if __name__ == "__main__":
    main()
