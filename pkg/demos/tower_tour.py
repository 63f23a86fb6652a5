"""Tour of the degree-6 tower: the splitting field of x^3 - 2 with exact arithmetic.

The model carries sigma of order 3 (c -> zeta*c) and tau of order 2
(zeta -> zeta^2), with parameters (b, lambda) = (-1, -1) and r = t = 2,
s = 1. Norm sets [N = b^k], monomial maps, the shift maps phi_k and the
induced tau-action on norm-set points are all evaluated exactly.
"""

from sdpcert import builtin_s3, make_norm_point, norm, phi_k_apply, tau_hat
from sdpcert.group_ring import GroupRingElement
from sdpcert.tower import apply_monomial_point


def fmt(x):
    return "(" + ", ".join(str(c) for c in x.coords) + ")"


def main():
    tw = builtin_s3()
    print("basis:", tw.labels)
    c = tw.basis_element(1)
    zeta = tw.basis_element(3)
    print("sigma(c) =", fmt(tw.sigma(c)), " tau(zeta) =", fmt(tw.tau(zeta)))
    print("norm(c) =", fmt(norm(tw, c)), "  norm(-1) =", fmt(norm(tw, tw.scalar(-1))))

    print()
    print("== A norm-set point and its tau-image ==")
    pt = make_norm_point(tw, tw.scalar(-1), 1)
    image = tau_hat(tw, pt)
    print(f"point x = -1 with N(x) = b^1; tau_hat gives {fmt(image.x)} at exponent {image.k}")
    twice = tau_hat(tw, image)
    print("applying tau_hat twice returns the point:", twice.x == pt.x)

    print()
    print("== Monomial maps move between norm sets ==")
    element = GroupRingElement(3, (1, 1, 1))  # the norm monomial
    moved = apply_monomial_point(tw, element, pt)
    print(f"the full norm sends the point to {fmt(moved.x)} at exponent {moved.k}")

    sym = GroupRingElement(3, (0, 1, 1))  # sigma + sigma^2, tau-fixed
    lhs = tau_hat(tw, apply_monomial_point(tw, sym, pt))
    rhs = apply_monomial_point(tw, sym, tau_hat(tw, pt))
    print("tau-fixed monomials commute with tau_hat:", lhs.x == rhs.x and lhs.k == rhs.k)

    print()
    print("== Shift maps ==")
    shifted = phi_k_apply(tw, pt, 2)
    print(f"phi_2 sends exponent {pt.k} to {shifted.k}; value {fmt(shifted.x)}")
    lhs = tau_hat(tw, shifted)
    rhs = phi_k_apply(tw, tau_hat(tw, pt), 2)
    print("phi_k commutes with tau_hat:", lhs.x == rhs.x and lhs.k == rhs.k)


if __name__ == "__main__":
    main()
