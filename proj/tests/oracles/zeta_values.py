"""Independent oracle: eta/zeta reference values at 50 significant digits.

Uses mpmath's own arbitrary-precision zeta and altzeta (Borwein/Euler-Maclaurin
internally, unrelated to the binary64 code under test). Output is pasted into
tests as frozen fixtures.
"""
import mpmath as mp

mp.mp.dps = 50


def show(tag, v):
    v = mp.mpc(v)
    print(f"{tag}: {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")


for s in [1, 2, 0.5, mp.mpc(0.5, 3), mp.mpc(0.25, 20), mp.mpc(0.5, 50),
          mp.mpc(0.9, -7), mp.mpc(3, 1), mp.mpc(0.05, 30)]:
    show(f"eta({mp.nstr(s, 6)})", mp.altzeta(s))
    if s != 1:
        show(f"zeta({mp.nstr(s, 6)})", mp.zeta(s))
for s in [mp.mpc(-1.5, 2), mp.mpc(-3, 0.5), mp.mpc(0.5, -14.134725), -1]:
    show(f"zeta({mp.nstr(s, 6)})", mp.zeta(s))
show("(1-2^0.3)zeta(0.7)", (1 - mp.mpf(2) ** 0.3) * mp.zeta(0.7))
show("Hminus(0.3,rho=2,omega=2)", mp.altzeta(mp.mpc(0.3, -1)) * mp.altzeta(mp.mpc(0.7, 1)))
show("Hminus(0.3,rho=1,omega=2)", mp.altzeta(0.3) * mp.altzeta(0.7))
for lam in [0, 10, 1]:
    show(f"E({lam})", abs(mp.altzeta(mp.mpc(0.5, lam))) ** 2)
for z in [mp.mpc(0.5, 0), mp.mpc(3.7, 0), mp.mpc(0.3, 10), mp.mpc(-2.5, 1), mp.mpc(1, 40)]:
    show(f"gamma({mp.nstr(z, 6)})", mp.gamma(z))
