"""Extend homomorphisms R p(c) -> Theta to R and show the extension is consistent.

For p = 1 + x and a few images, print the extension b, then check p(c) . b
against the prescribed image up to the verified order.
"""

import argparse

from leavitt_lab import Field
from leavitt_lab.laurent import Poly
from leavitt_lab.literals import parse_theta
from leavitt_lab.models.theta import baer_extend, p_of_c, theta_act


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="q")
    ap.add_argument("--order", type=int, default=12)
    args = ap.parse_args()
    F = Field.parse(args.field)

    p = Poly.parse("1 + x", F)
    images = [
        {"q": ["1"]},
        {"q-1": "1"},
        {"q": ["0", "x", "1+x"]},
    ]
    for lit in images:
        image = parse_theta(lit, F)
        b = baer_extend(p, image, args.order)
        back = theta_act(p_of_c(p), b)
        n = args.order - p.degree
        ok = back.truncate(n).agrees(image.truncate(n))
        print(f"p = {p}   image = {image}")
        print(f"  extension b = {b}")
        print(f"  p(c) . b agrees with image to order {n}: {ok}")


if __name__ == "__main__":
    main()
