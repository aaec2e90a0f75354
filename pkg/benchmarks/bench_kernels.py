"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the median time of each backend and the
speedup.  Inputs match what the encoder and renderer see at default sizes.
"""

import argparse
import statistics
import timeit

import numpy as np

from gdplan import kernels, sim


def cases():
    rng = np.random.default_rng(0)
    x = rng.normal(size=(8, 32, 32, 3)).astype(np.float32)
    cols = rng.normal(size=(8, 16, 16, 27)).astype(np.float32)
    lt = sim.make_map("left_turn")
    spec = sim.default_spec("real")
    pose = sim.pose_from(lt, 1.5, 0.1, 10)
    px, py = rng.uniform(-0.5, 3, 4096), rng.uniform(-0.5, 3, 4096)
    raster_args = (lt.pieces, pose.x, pose.y, pose.heading, 0.1 * spec.camera_height_factor, spec.camera_pitch, spec.fov,
                   lt.lane_width, spec.colors(), 32, 32, 2)
    return {
        "im2col 8x32x32x3 k3 s2": lambda k: k.im2col(x, 3, 2, 1),
        "col2im 8x32x32x3 k3 s2": lambda k: k.col2im(cols, x.shape, 3, 2, 1),
        "project_points 4096 (turn map)": lambda k: k.project_points(lt.pieces, px, py),
        "raster 32x32 ss2 (turn map)": lambda k: k.raster(*raster_args),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=7)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args()
    backends = kernels.backends()
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(backends)}")
    for name, fn in cases().items():
        times = {}
        for bname, mod in backends.items():
            t = timeit.repeat(lambda: fn(mod), repeat=args.repeat, number=args.number)
            times[bname] = statistics.median(t) / args.number
        line = "  ".join(f"{b} {1e3 * v:8.3f} ms" for b, v in times.items())
        speed = f"  speedup x{times['python'] / times['compiled']:.1f}" if "compiled" in times else ""
        print(f"{name:34s} {line}{speed}")


if __name__ == "__main__":
    main()
