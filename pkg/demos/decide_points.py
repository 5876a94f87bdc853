"""Decide periodicity for a handful of points and show the witnesses.

    python3 demos/decide_points.py
"""

from fractions import Fraction

from pentadyn.cyclo import parse_cyclo
from pentadyn.dynamics import classify
from pentadyn.symbolic import address_lasso, coding_d

POINTS = ["0", "1/2", "1/3", "2/5", "1/4,1/4,0,0", "1/(1-zeta)"]


def main():
    for text in POINTS:
        x = parse_cyclo(text)
        cert = classify(x)
        if cert.periodic:
            print(f"{text:>14}: periodic, period {cert.period}")
        else:
            print(f"{text:>14}: aperiodic, S^{cert.preperiod} = S^{cert.preperiod + cert.cycle}, "
                  f"address {address_lasso(x)}")
    print("coding of 1/3:", coding_d(Fraction(1, 3), 40))


if __name__ == "__main__":
    main()
