"""Independent reference values for the unit tests (mpmath, 20 digits).

Every value is computed from the integral definitions by adaptive quadrature,
not from the closed forms used in the library. The symbols depend on Re z only,
so the area integrals split into two one-dimensional quadratures.
"""
import mpmath as mp

mp.mp.dps = 20


def berezin_numeric(f, z, alpha):
    # B f(z) = (alpha/pi) * integral f(w) exp(-alpha |w - z|^2) dA(w), n = 1
    zx, zy = z
    gx = mp.quad(lambda x: f(x) * mp.e ** (-alpha * (x - zx) ** 2), [-mp.inf, zx, mp.inf])
    gy = mp.quad(lambda y: mp.e ** (-alpha * (y - zy) ** 2), [-mp.inf, zy, mp.inf])
    return alpha / mp.pi * gx * gy


def gaussian(lam):
    return lambda x: mp.e ** (-lam * x * x)


def trace_numeric(f, alpha):
    gx = mp.quad(lambda x: f(x) * mp.e ** (-alpha * x * x), [-mp.inf, 0, mp.inf])
    gy = mp.quad(lambda y: mp.e ** (-alpha * y * y), [-mp.inf, 0, mp.inf])
    return alpha / mp.pi * gx * gy


print("eval lambda=1 z=0.5+0.7i:", mp.e ** (-mp.mpf(1) / 4 * (2 * mp.mpf("0.5")) ** 2))
print("kernel z=w=1 alpha=2:", mp.e ** 2)
print("weight z=1 alpha=1:", mp.e ** -1 / mp.pi)
print("B gauss lam=1 a=1 z=0:", berezin_numeric(gaussian(1), (0, 0), 1))
print("B gauss lam=2 a=3 z=.4+.1i:", berezin_numeric(gaussian(2), (mp.mpf("0.4"), mp.mpf("0.1")), 3))
print("B_2 g lam=2 at 0:", berezin_numeric(gaussian(2), (0, 0), 2))
print("trace lam=1 a=1:", trace_numeric(gaussian(1), 1))
print("trace lam=1 a=2.5:", trace_numeric(gaussian(1), mp.mpf("2.5")))
for k, a in [(0, 2), (2, 1), (4, 1), (8, 1)]:
    print(f"moment k={k} a={a}:", mp.quad(lambda x: x ** k * mp.e ** (-a * x * x), [-mp.inf, 0, mp.inf]))
# Taylor remainder at z = 0, lambda = 1: exact transform minus first-order approx
for alpha in [10, 20, 40]:
    exact = berezin_numeric(gaussian(1), (0, 0), alpha)
    print(f"taylor remainder z=0 alpha={alpha}:", abs(exact - (1 - mp.mpf(1) / (2 * alpha))))
alpha = 100
exact = berezin_numeric(gaussian(1), (mp.mpf("0.3"), 0), alpha)
u2 = (2 * mp.mpf("0.3")) ** 2
approx = (1 + u2 / (4 * alpha) - mp.mpf(1) / (2 * alpha)) * mp.e ** (-u2 / 4)
print("taylor remainder z=0.3 alpha=100:", abs(exact - approx))
# uncertainty, lambda = 1, K = 1: psi = exp(-x^2/4)
psi = lambda x: mp.e ** (-x * x / 4)
dpsi = lambda x: -x / 2 * psi(x)
print("var_x:", mp.quad(lambda x: x * x * psi(x) ** 2, [-mp.inf, mp.inf]))
print("var_p:", mp.quad(lambda x: dpsi(x) ** 2, [-mp.inf, mp.inf]))
print("rhs:", mp.quad(lambda x: psi(x) ** 2, [-mp.inf, mp.inf]) ** 2 / 4)
