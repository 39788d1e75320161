"""Time the numba and pure-numpy kernel paths on training-sized inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Both implementations live side by side in ``ctxnav._kernels``; the env flag
only picks which one the engine binds, so they can be compared in-process.
Results are also checked for agreement.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from ctxnav import _kernels as K


def cases(rng):
    b, n, d, c, hid = 32, 9, 6, 64, 64
    grid = rng.normal(size=(b, d, d, c))
    nodes = rng.normal(size=(b, n, c))
    cells = rng.integers(0, d * d, size=(b, n))
    cells[:, -2:] = -1
    gates = rng.normal(size=(b, 4 * hid))
    c_prev = rng.normal(size=(b, hid))
    h, cc, acts, tc = K.lstm_forward_numpy(gates, c_prev)
    gh, gc = rng.normal(size=(b, hid)), rng.normal(size=(b, hid))
    y7 = rng.normal(size=(b, n, 7, 7, c))
    g_out = rng.normal(size=(b, d, d, c))
    idx = rng.integers(0, 20, size=(b, 16))
    g_emb = rng.normal(size=(b, 16, 32))
    cols = K.im2col_numpy(grid, 5, 2)
    return {
        "im2col k=5": (lambda m: getattr(K, f"im2col_{m}")(grid, 5, 2)),
        "col2im k=5": (lambda m: getattr(K, f"col2im_{m}")(cols, grid.shape, 5, 2)),
        "scatter_rows": (lambda m: getattr(K, f"scatter_rows_{m}")(nodes, cells, d * d)),
        "embedding_grad": (lambda m: getattr(K, f"embedding_grad_{m}")(g_emb, idx, 20)),
        "lstm_forward": (lambda m: getattr(K, f"lstm_forward_{m}")(gates, c_prev)),
        "lstm_backward": (lambda m: getattr(K, f"lstm_backward_{m}")(gh, gc, acts, tc, c_prev)),
        "node_conv_scatter k=7": (lambda m: getattr(K, f"node_conv_scatter_{m}")(y7, cells, d, 7, 3)),
        "node_conv_gather k=7": (lambda m: getattr(K, f"node_conv_gather_{m}")(g_out, cells, 7, 3)),
    }



def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    if K.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<24}{'numpy us':>10}{'numba us':>10}{'speedup':>9}  agree")
    for name, fn in cases(np.random.default_rng(0)).items():
        a, b = fn("numpy"), fn("numba")  # also warms the JIT
        a = a if isinstance(a, tuple) else (a,)
        b = b if isinstance(b, tuple) else (b,)
        agree = all(np.allclose(x, y, rtol=1e-12, atol=1e-12) for x, y in zip(a, b))
        t_np = min(timeit.repeat(lambda: fn("numpy"), number=args.repeat, repeat=3)) / args.repeat * 1e6
        t_nb = min(timeit.repeat(lambda: fn("numba"), number=args.repeat, repeat=3)) / args.repeat * 1e6
        print(f"{name:<24}{t_np:>10.1f}{t_nb:>10.1f}{t_np / t_nb:>8.1f}x  {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
