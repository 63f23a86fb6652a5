"""Tour of certificates: exact witnesses for birational maps between norm-set varieties.

A certificate packages tau-fixed group-ring lifts of a unit alpha with
eps_bar(alpha) = l and of its inverse beta, plus the bookkeeping integers k
and s. Verifying it replays the construction: the composite of the two
monomial maps with the shifts phi_{-k} and phi_{-s} canonicalizes to the
identity, and r' - s - eps(beta)*k = 0 holds exactly.
"""

import dataclasses

from sdpcert import make_certificate, verify_certificate
from sdpcert.group_ring import GroupRingElement


def show(cert):
    print(f"certificate for n={cert.n}, r={cert.r}, l={cert.l}:")
    print(f"  alpha_tilde = {cert.alpha_tilde.coeffs}   k = {cert.k}")
    print(f"  beta_tilde  = {cert.beta_tilde.coeffs}   s = {cert.s}")
    record = verify_certificate(cert)
    for check in record.checks:
        mark = "pass" if check.passed else "FAIL"
        detail = f"  ({check.detail})" if check.detail else ""
        print(f"  [{mark}] {check.name}{detail}")
    deviation = cert.beta_tilde * cert.alpha_tilde - GroupRingElement.one(cert.n)
    print(f"  beta*alpha - 1 has constant coefficient row {deviation.coeffs}")
    print()


def main():
    show(make_certificate(3, 2, 2))
    show(make_certificate(5, 4, 3))
    show(make_certificate(7, 6, 5))

    print("corrupting k by one breaks the bookkeeping checks:")
    cert = make_certificate(3, 2, 2)
    broken = dataclasses.replace(cert, k=cert.k + 1)
    record = verify_certificate(broken)
    for check in record.checks:
        if not check.passed:
            print(f"  [FAIL] {check.name}: {check.detail}")


if __name__ == "__main__":
    main()
