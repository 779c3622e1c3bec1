"""Dev-only: compute high-precision reference constants to freeze into tests.

Not part of the package. Run: python3 dev_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40

print("== special function reference values ==")
print("erf(1)  =", mp.erf(1))
print("I1(1)   =", mp.besseli(1, 1))
print("I1(2)   =", mp.besseli(1, 2))
print("L1(1)   =", mp.struvel(1, 1))
print("L1(2)   =", mp.struvel(1, 2))
print("L1(0.5) =", mp.struvel(1, mp.mpf("0.5")))
print("L1(5)   =", mp.struvel(1, 5))

print()
print("== pure cubic oscillator exact period, A=1 ==")
# tau = 4*sqrt(2) * int_0^1 dy/sqrt(1-y^4) = 4*sqrt(2) * Gamma(1/4)Gamma(1/2) / (4 Gamma(3/4))
tau_cubic = 4 * mp.sqrt(2) * mp.gamma(mp.mpf(1) / 4) * mp.gamma(mp.mpf(1) / 2) / (4 * mp.gamma(mp.mpf(3) / 4))
print("tau_cubic(1) =", tau_cubic)
print("omega_exact  =", 2 * mp.pi / tau_cubic)
print("ratio sqrt(3)/2 / omega_exact =", mp.sqrt(3) / 2 / (2 * mp.pi / tau_cubic))

print()
print("== Duffing f = x + x^3 exact period at selected A (energy integral) ==")
def tau_energy(V, f, A):
    # tau = 4 * int_0^{pi/2} A cos(phi)/sqrt(2(V(A)-V(A sin phi))) dphi
    def g(phi):
        d = V(A) - V(A * mp.sin(phi))
        if d <= 0:
            return mp.sqrt(A / f(A))  # removable limit at phi = pi/2
        return A * mp.cos(phi) / mp.sqrt(2 * d)
    return 4 * mp.quad(g, [0, mp.pi / 2])

V_duff = lambda x: x**2 / 2 + x**4 / 4
f_duff = lambda x: x + x**3
for A in [mp.mpf("0.25"), mp.mpf("0.5"), mp.mpf(1)]:
    tau = tau_energy(V_duff, f_duff, A)
    om_ex = 2 * mp.pi / tau
    om_ap = mp.sqrt(1 + 3 * A**2 / 4)
    print(f"A={A}: tau={tau}  om_exact={om_ex}  om_approx={om_ap}  relerr={(om_ap-om_ex)/om_ex}")

print()
print("== sinh model Chebyshev coefficients at A=1: b_{2n+1} = 2 I_{2n+1}(1) ==")
for n in range(5):
    print(f"b_{2*n+1} =", 2 * mp.besseli(2 * n + 1, 1))

print()
print("== Bratu exact critical point ==")
theta_c = mp.findroot(lambda t: mp.e**t * (t - 2) - t - 2, mp.mpf("2.4"))
lam_c = 2 * theta_c**2 / mp.cosh(theta_c / 2) ** 2
slope_c = 2 * theta_c * mp.tanh(theta_c / 2)
print("theta_c  =", theta_c)
print("lambda_c =", lam_c)
print("slope_c  =", slope_c)
print("u(theta_c, 1/2) = 2 ln cosh(theta_c/2) =", 2 * mp.log(mp.cosh(theta_c / 2)))
print("lambda(10) =", 2 * mp.mpf(100) / mp.cosh(5) ** 2)

print()
print("== polynomial trial u = A x (1-x) ==")
def lam_poly(A):
    A = mp.mpf(A)
    den = mp.sqrt(mp.pi) * (A - 2) * mp.e ** (A / 4) * mp.erf(mp.sqrt(A) / 2) + 2 * mp.sqrt(A)
    return 4 * A ** mp.mpf("2.5") / (3 * den)

# critical point: d lambda / dA = 0
A_c_poly = mp.findroot(lambda A: mp.diff(lam_poly, A), mp.mpf("4.7"))
print("A_c(poly)      =", A_c_poly)
print("lambda_c(poly) =", lam_poly(A_c_poly))
print("slope_c(poly)  =", A_c_poly)
for A in ["0.5", "2", "4.727715383", "8"]:
    print(f"lam_poly({A}) =", lam_poly(mp.mpf(A)))

# quadrature cross-check of the closed form
def lam_poly_quad(A):
    A = mp.mpf(A)
    num = A * A / 3
    den = mp.quad(lambda x: A * x * (1 - x) * mp.e ** (A * x * (1 - x)), [0, 1])
    return num / den
print("quad check lam_poly(2):", lam_poly_quad(2), "vs", lam_poly(2))

print()
print("== sine trial u = A sin(pi x) ==")
def lam_sine(A):
    A = mp.mpf(A)
    return A * mp.pi**3 / (2 * (2 + mp.pi * (mp.besseli(1, A) + mp.struvel(1, A))))

A_c_sine = mp.findroot(lambda A: mp.diff(lam_sine, A), mp.mpf("1.2"))
print("A_c(sine)      =", A_c_sine)
print("lambda_c(sine) =", lam_sine(A_c_sine))
print("slope_c(sine)  =", mp.pi * A_c_sine)
print("published slope/pi =", mp.mpf("3.756549365") / mp.pi)

def lam_sine_quad(A):
    A = mp.mpf(A)
    num = A**2 * mp.pi**2 / 2
    den = mp.quad(lambda x: A * mp.sin(mp.pi * x) * mp.e ** (A * mp.sin(mp.pi * x)), [0, 1])
    return num / den
print("quad check lam_sine(1):", lam_sine_quad(1), "vs", lam_sine(1))

print()
print("== trial-vs-exact branch deviation at matched slope ==")
def theta_of_slope(s):
    return mp.findroot(lambda t: 2 * t * mp.tanh(t / 2) - s, mp.mpf(1) + s / 3)

def lam_exact_of_slope(s):
    t = theta_of_slope(s)
    return 2 * t**2 / mp.cosh(t / 2) ** 2

import numpy as np
slopes = [mp.mpf(s) for s in np.linspace(0.2, 8.0, 40)]
max_poly_low = max_poly_all = max_sine_low = max_sine_all = mp.mpf(0)
for s in slopes:
    le = lam_exact_of_slope(s)
    dp = abs(lam_poly(s) - le) / le
    ds = abs(lam_sine(s / mp.pi) - le) / le
    max_poly_all = max(max_poly_all, dp)
    max_sine_all = max(max_sine_all, ds)
    if s <= 4:
        max_poly_low = max(max_poly_low, dp)
        max_sine_low = max(max_sine_low, ds)
print("max rel dev poly, slope<=4:", max_poly_low)
print("max rel dev sine, slope<=4:", max_sine_low)
print("max rel dev poly, slope<=8:", max_poly_all)
print("max rel dev sine, slope<=8:", max_sine_all)

print()
print("== taylor vs exact upper branch (acceptance 7 sanity) ==")
def taylor_slope(lam):
    lam = mp.mpf(lam)
    return mp.sqrt(lam) * mp.tan(mp.sqrt(lam) / 2)
for t in [mp.mpf("2.45"), mp.mpf(3), mp.mpf(4), mp.mpf(6), mp.mpf(8)]:
    lam = 2 * t**2 / mp.cosh(t / 2) ** 2
    se = 2 * t * mp.tanh(t / 2)
    st = taylor_slope(lam)
    print(f"theta={t}: lam={mp.nstr(lam,10)} exact_slope={mp.nstr(se,10)} taylor={mp.nstr(st,10)} reldiff={mp.nstr(abs(st-se)/se,6)}")

print()
print("== taylor lower branch vs exact, lambda<=1 (2% claim) ==")
for lam in ["0.1", "0.3", "0.5", "0.7", "0.9", "1.0"]:
    lam_ = mp.mpf(lam)
    # exact lower-branch slope at this lambda
    t = mp.findroot(lambda t: 2 * t**2 / mp.cosh(t / 2) ** 2 - lam_, mp.sqrt(lam_ / 2))
    se = 2 * t * mp.tanh(t / 2)
    st = taylor_slope(lam_)
    print(f"lam={lam}: exact={mp.nstr(se,10)} taylor={mp.nstr(st,10)} reldiff={mp.nstr(abs(st-se)/se,6)}")

print()
print("== sweep upper limits: lambda(A) < 0.5 ==")
for A in [18, 19, 20, 21, 22]:
    print(f"lam_poly({A}) =", mp.nstr(lam_poly(A), 8))
for A in [4.5, 5.0, 5.2, 5.5, 6.0]:
    print(f"lam_sine({A}) =", mp.nstr(lam_sine(A), 8))
print("exact: lambda(8) =", mp.nstr(2 * mp.mpf(64) / mp.cosh(4) ** 2, 8), " slope(8) =", mp.nstr(2 * 8 * mp.tanh(4), 8))
