"""Command-line client for the solver service.

Every subcommand talks to the HTTP API: by default against an in-process
instance of the FastAPI app (no server needed), or against a running
server when ``--url`` is given.  Exit codes: 0 success, 2 unusable input
(parse errors, invalid orders, bad flags), 3 singular matrix ("No
solutions"), 4 zero-pivot breakdown without a fallback.
"""
from __future__ import annotations

import argparse
import asyncio
import csv
import sys
from pathlib import Path

import httpx


def _fmt(value: float) -> str:
    return f"{value:.17g}"


class _InProcessTransport(httpx.BaseTransport):
    """Sync httpx transport that drives the ASGI app without a socket."""

    def __init__(self, asgi_app):
        self._transport = httpx.ASGITransport(app=asgi_app)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        request.read()

        async def _run():
            response = await self._transport.handle_async_request(request)
            body = await response.aread()
            await response.aclose()
            return response, body

        response, body = asyncio.run(_run())
        # Rebuild with materialised bytes: the sync client rejects the
        # async stream the ASGI transport returns.
        return httpx.Response(status_code=response.status_code,
                              headers=response.headers, content=body,
                              request=request)


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=None)
    from .app import app

    return httpx.Client(transport=_InProcessTransport(app),
                        base_url="http://pentasolve.local", timeout=None)


def _fail(response: httpx.Response) -> int:
    """Print the service error and translate it to an exit code."""
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        code = detail.get("code", "")
        message = detail.get("message", "")
        if code == "zero_pivot":
            print(f"error: zero pivot at index {detail.get('index')}; "
                  f"rerun with --alg auto to rescue it", file=sys.stderr)
            return 4
        if code == "singular_matrix":
            print("No solutions")
            return 3
        print(f"error: {message or code}", file=sys.stderr)
        return 2
    if isinstance(detail, list):
        for item in detail:
            print(f"error: {item.get('msg', item)}", file=sys.stderr)
        return 2
    print(f"error: HTTP {response.status_code}", file=sys.stderr)
    return 2


def _read_file(path: str) -> str | None:
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None


def cmd_solve(args) -> int:
    text = _read_file(args.file)
    if text is None:
        return 2
    with _client(args.url) as client:
        resp = client.post("/solve",
                           json={"penta": text, "algorithm": args.alg})
        if resp.status_code != 200:
            return _fail(resp)
        body = resp.json()
    print(f"algorithm: {body['algorithm']}")
    solution = body.get("solution_exact") or \
        [_fmt(v) for v in body["solution"]]
    print("solution:", " ".join(solution))
    print("determinant:",
          body.get("determinant_exact") or _fmt(body["determinant"]))
    pivots = body.get("pivot_expressions") or \
        [_fmt(v) for v in body.get("pivots", [])]
    print("pivots:", " ".join(pivots))
    if body.get("rescued_indices"):
        print("rescued pivot indices:",
              " ".join(str(i) for i in body["rescued_indices"]))
    if body.get("near_zero_indices"):
        print("near-zero pivot indices:",
              " ".join(str(i) for i in body["near_zero_indices"]))
    return 0


def cmd_det(args) -> int:
    text = _read_file(args.file)
    if text is None:
        return 2
    with _client(args.url) as client:
        resp = client.post("/determinant", json={"penta": text})
        if resp.status_code != 200:
            return _fail(resp)
        body = resp.json()
    print(body["determinant_exact"])
    print(f"algorithm: {body['algorithm']}")
    return 0


def cmd_gen_example3(args) -> int:
    with _client(args.url) as client:
        resp = client.post("/generate/example3", json={"n": args.n})
        if resp.status_code != 200:
            return _fail(resp)
        body = resp.json()
    Path(args.out).write_text(body["penta"])
    print(f"wrote {args.out} (n={body['n']})")
    return 0


def _bench_table(rows: list[dict]) -> str:
    header = ("n", "algorithm", "max_abs_error", "time_seconds", "op_count")
    table = [header]
    for row in rows:
        for name, cell in row["results"].items():
            if cell.get("error"):
                table.append((str(row["n"]), name, cell["error"], "-", "-"))
            else:
                table.append((
                    str(row["n"]), name,
                    f"{cell['max_abs_error']:.4e}",
                    f"{cell['wall_time_seconds']:.6f}",
                    str(cell["op_count"]),
                ))
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    return "\n".join("  ".join(val.rjust(w) for val, w in zip(row, widths))
                     for row in table)


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    with _client(args.url) as client:
        resp = client.post("/bench", json={
            "sizes": sizes, "algorithms": algs, "repeats": args.repeats})
        if resp.status_code != 200:
            return _fail(resp)
        rows = resp.json()["rows"]
    print(_bench_table(rows))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(("n", "algorithm", "max_abs_error",
                             "wall_time_seconds", "op_count", "error"))
            for row in rows:
                for name, cell in row["results"].items():
                    writer.writerow((row["n"], name,
                                     cell.get("max_abs_error"),
                                     cell.get("wall_time_seconds"),
                                     cell.get("op_count"),
                                     cell.get("error")))
        print(f"wrote {args.csv}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentasolve",
        description="Solve pentadiagonal linear systems in PENTA v1 files.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_url(p):
        p.add_argument("--url", default=None,
                       help="base URL of a running service "
                            "(default: run the service in-process)")

    p = sub.add_parser("solve", help="solve a system from a PENTA v1 file")
    p.add_argument("file")
    p.add_argument("--alg", default="auto",
                   choices=["ptrans1", "ptrans2", "sptrans1", "sptrans2",
                            "auto"])
    add_url(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("det", help="determinant of the matrix in a file")
    p.add_argument("file")
    add_url(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("gen-example3",
                       help="generate the built-in fourth-difference "
                            "benchmark system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    add_url(p)
    p.set_defaults(func=cmd_gen_example3)

    p = sub.add_parser("bench",
                       help="benchmark solvers on the fourth-difference "
                            "family")
    p.add_argument("--sizes", required=True,
                   help="comma-separated orders, e.g. 500,5000")
    p.add_argument("--algs", default="ptrans1,ptrans2",
                   help="comma-separated algorithm names")
    p.add_argument("--csv", default=None,
                   help="also write the rows to this CSV file")
    p.add_argument("--repeats", type=int, default=1,
                   help="timing repeats per cell (best is kept)")
    add_url(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach the service: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
