"""Matching preclusion, restricted preclusion, and anti-Kekule numbers with
certificates; infinity is a first-class answer."""

from preclusion import (
    AK,
    MP,
    brute_force_solve,
    cycle,
    hypercube,
    mp_s,
    solve,
    trivial_mp_set,
)

q3 = hypercube(3)

cert = solve(q3, MP, deterministic=True)
print(f"mp(Q3) = {cert.value}, witness edges {sorted(cert.witness.members)}")
print("  evidence:", cert.evidence)
print("  a vertex star always works:", sorted(trivial_mp_set(q3, 0).members))

cert = solve(q3, mp_s(1))
print(f"\nmp_1(Q3) = {cert.value}  (no isolated vertices allowed afterwards)")
cert = solve(q3, mp_s(2))
print(f"mp_2(Q3) = {cert.value}  (every survivor component needs 3+ vertices)")

c4 = cycle(4)
print(f"\nmp(C4) = {solve(c4, MP).value}")
cert = solve(c4, mp_s(1))
print(f"mp_1(C4) = {cert.value}: {cert.reason}")

cert = solve(cycle(6), AK)
print(f"\nak(C6) = {cert.value}: {cert.reason}")

budgeted = solve(q3, MP, budget=2)
print(f"\ndecision mode, budget 2 on Q3: feasible={budgeted.feasible} ({budgeted.reason})")

oracle = brute_force_solve(q3, MP)
print(f"\nindependent oracle agrees on Q3: value {oracle.value},"
      f" witness {sorted(oracle.witness.members)}")
