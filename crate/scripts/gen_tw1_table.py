"""Generate the embedded Tracy-Widom (beta = 1) distribution table.

F1(s) = det(I - K_s) on L^2(0, inf), K_s(x, y) = Ai(s + (x + y) / 2) / 2,
discretized with Gauss-Legendre quadrature on a truncated interval
(Bornemann, "On the numerical evaluation of distributions in random matrix
theory", 2010). The determinant is taken through the eigenvalues of the
symmetrized kernel matrix, so log F1 = sum(log1p(-lambda_i)) and the survival
function 1 - F1 = -expm1(log F1) keep relative accuracy in both tails.

Usage: python3 scripts/gen_tw1_table.py > crates/core/src/theory/tw1_table.rs
"""
import numpy as np
from scipy.special import airy

NODES = 96
LENGTH = 24.0
STEP = 0.05
LO, HI = -8.0, 8.0


def log_f1(s, nodes, weights):
    sw = np.sqrt(weights)
    arg = s + (nodes[:, None] + nodes[None, :]) / 2.0
    k = 0.5 * airy(arg)[0] * sw[:, None] * sw[None, :]
    lam = np.linalg.eigvalsh(k)
    return float(np.sum(np.log1p(-lam)))


def main():
    x, w = np.polynomial.legendre.leggauss(NODES)
    nodes = LENGTH * (x + 1.0) / 2.0
    weights = LENGTH * w / 2.0
    count = int(round((HI - LO) / STEP)) + 1
    print("// @generated by scripts/gen_tw1_table.py; do not edit by hand.")
    print("//")
    print("// Tracy-Widom (beta = 1) distribution on a uniform grid, from the Fredholm")
    print(f"// determinant of the Airy-type kernel ({NODES}-node Gauss-Legendre on [0, {LENGTH:g}]).")
    print("// Columns: x, F1(x), 1 - F1(x).")
    print()
    print(f"pub(crate) const TW1_X_MIN: f64 = {LO:.1f};")
    print(f"pub(crate) const TW1_X_STEP: f64 = {STEP:.2f};")
    print()
    print(f"pub(crate) static TW1_TABLE: [(f64, f64, f64); {count}] = [")
    for i in range(count):
        s = LO + i * STEP
        lf = log_f1(s, nodes, weights)
        cdf = float(np.exp(lf))
        sf = float(-np.expm1(lf))
        print(f"    ({s:.2f}, {cdf:.16e}, {sf:.16e}),")
    print("];")


if __name__ == "__main__":
    main()
