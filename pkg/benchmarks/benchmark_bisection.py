import argparse
import time

from sbmrecovery.decoders import min_bisection_exact, min_bisection_local, two_step_decode
from sbmrecovery.decoders.bisection import LocalBisectionDecoder
from sbmrecovery.model import SbmParams, generate, recovery_error
from sbmrecovery.utils.logging import get_logger, use_sbmrecovery_log_handler

use_sbmrecovery_log_handler("in_root_logger")
logger = get_logger(__name__)


def benchmark_local(params: SbmParams, seed: int, restarts: int) -> [float, int, float]:
    labels, graph = generate(params, seed)
    t = time.time()
    result = min_bisection_local(graph, restarts=restarts, seed=seed)
    return time.time() - t, result.cut_size, recovery_error(labels, result.labels).r


def benchmark_two_step(params: SbmParams, seed: int, restarts: int) -> [float, float]:
    labels, graph = generate(params, seed)
    t = time.time()
    estimate = two_step_decode(graph, params, LocalBisectionDecoder(restarts), seed=seed)
    return time.time() - t, recovery_error(labels, estimate).r


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--a", type=float, default=20.0, required=False)
    parser.add_argument("--b", type=float, default=10.0, required=False)
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800], required=False)
    parser.add_argument("--restarts", type=int, default=20, required=False)
    parser.add_argument("--seed", type=int, default=7348, required=False)
    parser.add_argument("--num_iters", type=int, default=5, required=False)
    parser.add_argument("--exact_n", type=int, default=20, required=False)

    args = parser.parse_args()

    small_params = SbmParams(a=args.exact_n / 2, b=args.exact_n / 10, n=args.exact_n)
    _, small_graph = generate(small_params, args.seed)
    t = time.time()
    exact = min_bisection_exact(small_graph)
    logger.info(f"Exact bisection, n: {args.exact_n}, time: {time.time() - t:.5f}, cut: {exact.cut_size}")

    for n in args.sizes:
        params = SbmParams(a=args.a, b=args.b, n=n)
        local_time = local_error = two_step_time = two_step_error = 0
        total_cut = 0
        for i in range(args.num_iters):
            iter_time, cut, r = benchmark_local(params, args.seed + i, args.restarts)
            local_time += iter_time
            total_cut += cut
            local_error += r

            iter_time, r = benchmark_two_step(params, args.seed + i, args.restarts)
            two_step_time += iter_time
            two_step_error += r
        logger.info(
            f"n: {n}, local search time: {local_time / args.num_iters:.5f}, cut: {total_cut / args.num_iters:.1f}, "
            f"error: {local_error / args.num_iters:.5f}, two-step time: {two_step_time / args.num_iters:.5f}, "
            f"error: {two_step_error / args.num_iters:.5f}"
        )
