"""Independent oracle: critical-line zeros as sign changes of Hardy's Z(t).

Z(t) = exp(i*theta(t)) * zeta(1/2 + i t) is real on the critical line, so
its simple zeros are located by bracketing sign changes on a fine grid and
bisecting at 40 significant digits. Used only to freeze test fixtures.
"""
import sys
import mpmath as mp

mp.mp.dps = 40


def zeros(lo, hi, step=mp.mpf("0.01")):
    out = []
    t = mp.mpf(lo)
    z_prev = mp.siegelz(t)
    while t < hi:
        t2 = t + step
        z2 = mp.siegelz(t2)
        if mp.sign(z_prev) != mp.sign(z2):
            a, b = t, t2
            for _ in range(140):
                m = (a + b) / 2
                if mp.sign(mp.siegelz(m)) == mp.sign(mp.siegelz(a)):
                    a = m
                else:
                    b = m
            out.append((a + b) / 2)
        t, z_prev = t2, z2
    return out


if __name__ == "__main__":
    lo = float(sys.argv[1]) if len(sys.argv) > 1 else 0.0
    hi = float(sys.argv[2]) if len(sys.argv) > 2 else 60.0
    for z in zeros(lo, hi):
        print(mp.nstr(z, 20))
