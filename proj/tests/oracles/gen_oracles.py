"""Freezes reference values from scipy/statsmodels into tests/oracle_values.hpp.

The C++ tests compare against these numbers, so the library is checked
against an independent implementation without needing Python at test time.
Run from the repository root: python3 tests/oracles/gen_oracles.py
"""
import numpy as np
import scipy.special as sp
import scipy.stats as st
import statsmodels.api as sm
from statsmodels.stats.diagnostic import acorr_breusch_godfrey, het_breuschpagan, het_white
from statsmodels.stats.stattools import durbin_watson
from statsmodels.tsa.stattools import adfuller, grangercausalitytests
from statsmodels.tsa.api import VAR
from statsmodels.tsa.adfvalues import mackinnonp, mackinnoncrit

out = []


def arr(name, values):
    vals = ", ".join(repr(float(v)) for v in np.ravel(values))
    out.append(f"inline constexpr double {name}[] = {{{vals}}};")


def scalar(name, v):
    out.append(f"inline constexpr double {name} = {float(v)!r};")


rng = np.random.RandomState(20240601)

# special functions and distributions: rows of (args..., value)
chi2 = [(x, df, st.chi2.sf(x, df)) for x, df in [(0.5, 1), (3.84, 1), (5.99, 2), (10.0, 3), (50.42, 2), (0.01, 5),
                                                   (120.0, 100), (2.0, 0.5), (30.0, 10), (1e-6, 2)]]
arr("kChi2Sf", chi2)
fs = [(x, a, b, st.f.sf(x, a, b)) for x, a, b in [(7.33, 1, 1641), (2.5, 3, 40), (0.5, 2, 10), (4.39, 6, 70),
                                                  (1.0, 1, 1), (10.0, 5, 200), (0.05, 4, 30), (3.0, 10, 8)]]
arr("kFSf", fs)
ts = [(x, df, st.t.sf(x, df)) for x, df in [(1.96, 1000), (2.0, 5), (-1.5, 12), (0.0, 3), (4.0, 30), (0.3, 1),
                                            (12.0, 80)]]
arr("kTSf", ts)
nc = [(x, st.norm.cdf(x)) for x in [-8.0, -3.0, -1.0, 0.0, 0.5, 1.959963984540054, 6.0]]
arr("kNormCdf", nc)
nq = [(p, st.norm.ppf(p)) for p in [1e-10, 0.001, 0.025, 0.1, 0.5, 0.8, 0.975, 0.999999]]
arr("kNormPpf", nq)
gp = [(a, x, sp.gammainc(a, x), sp.gammaincc(a, x)) for a, x in [(0.5, 0.1), (1.0, 1.0), (2.5, 4.0), (10.0, 3.0),
                                                                 (10.0, 20.0), (50.0, 45.0), (0.1, 5.0)]]
arr("kGamma", gp)
bi = [(x, a, b, sp.betainc(a, b, x)) for x, a, b in [(0.2, 0.5, 0.5), (0.5, 2.0, 3.0), (0.9, 10.0, 1.5),
                                                    (0.01, 1.0, 200.0), (0.7, 30.0, 20.0), (0.3, 0.2, 7.0)]]
arr("kBeta", bi)

# descriptive statistics of a skewed sample
d = rng.gamma(2.0, 1.5, size=60)
arr("kDescData", d)
jb = st.jarque_bera(d)
arr("kDescExpect", [d.mean(), np.median(d), d.max(), d.min(), d.std(ddof=1), st.skew(d), st.kurtosis(d, fisher=False),
                    jb.statistic, jb.pvalue])

# regression data
n = 80
x1 = rng.normal(size=n)
x2 = 0.5 * x1 + rng.normal(size=n)
e = np.zeros(n)
for t in range(n):
    e[t] = (0.4 * e[t - 1] if t else 0.0) + rng.normal() * (1.0 + 0.5 * abs(x1[t]))
y = 1.0 + 2.0 * x1 - 0.7 * x2 + e
arr("kRegY", y)
arr("kRegX1", x1)
arr("kRegX2", x2)
X = sm.add_constant(np.column_stack([x1, x2]), prepend=False)
res = sm.OLS(y, X).fit()
arr("kOlsParams", res.params)
arr("kOlsBseClassical", res.bse)
arr("kOlsBseHc1", sm.OLS(y, X).fit(cov_type="HC1").bse)
arr("kOlsBseHac3", sm.OLS(y, X).fit(cov_type="HAC", cov_kwds={"maxlags": 3, "use_correction": False}).bse)
arr("kOlsBseHac0", sm.OLS(y, X).fit(cov_type="HAC", cov_kwds={"maxlags": 0, "use_correction": False}).bse)
arr("kOlsStats", [res.rsquared, res.rsquared_adj, res.ssr, res.llf, durbin_watson(res.resid), res.aic / n, res.bic / n])
arr("kOlsCorr", np.corrcoef(np.vstack([y, x1, x2]))[np.tril_indices(3, -1)])
res_nc = sm.OLS(y, np.column_stack([x1, x2])).fit()
arr("kOlsNoConst", [res_nc.params[0], res_nc.params[1], res_nc.rsquared])
ft = res.f_test(np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]))
arr("kOlsWald2", [float(np.squeeze(ft.fvalue)), float(np.squeeze(ft.pvalue))])

bg = acorr_breusch_godfrey(res, nlags=2)
arr("kBg2", [bg[0], bg[1]])
bp = het_breuschpagan(res.resid, X)
arr("kBpg", [bp[0], bp[1]])
wh = het_white(res.resid, X)
arr("kWhite", [wh[0], wh[1]])

# ADF with fixed lags
w = np.cumsum(rng.normal(size=150)) + 5.0
arr("kAdfSeries", w)
rows = []
for lag in (0, 2):
    for reg in ("n", "c", "ct"):
        r = adfuller(w, maxlag=lag, regression=reg, autolag=None)
        rows.append(r[0])
arr("kAdfStats", rows)  # lag 0: n, c, ct; lag 2: n, c, ct
arr("kMacKinnon", [mackinnonp(-3.2, regression="c"), mackinnonp(-2.0, regression="c"), mackinnonp(-4.0, regression="ct"),
                   mackinnonp(-1.5, regression="n")])
arr("kMacKinnonCrit", list(mackinnoncrit(1, "c", 2500)) + list(mackinnoncrit(1, "ct", 2500)) + list(mackinnoncrit(1, "n", 2500)))

# VAR(2) and Granger
m = 200
a = np.zeros(m)
b = np.zeros(m)
for t in range(1, m):
    a[t] = 0.5 * a[t - 1] + rng.normal()
    b[t] = 0.2 * b[t - 1] + 0.4 * a[t - 1] + rng.normal()
arr("kVarA", a)
arr("kVarB", b)
vr = VAR(np.column_stack([a, b])).fit(2, trend="c")
# statsmodels params rows: const, A.L1, B.L1, A.L2, B.L2 ; columns equations
arr("kVarParams", vr.params.T)  # eq A then eq B, each [c, A1, B1, A2, B2]
arr("kVarSigmaMle", vr.sigma_u_mle)
g = grangercausalitytests(np.column_stack([b, a]), maxlag=[2], verbose=False)[2][0]["ssr_ftest"]
arr("kGrangerAtoB", [g[0], g[1], g[2], g[3]])

with open("tests/oracle_values.hpp", "w") as f:
    f.write("#pragma once\n// Generated by tests/oracles/gen_oracles.py; do not edit.\n\nnamespace oracle {\n\n")
    f.write("\n".join(out))
    f.write("\n\n}  // namespace oracle\n")
