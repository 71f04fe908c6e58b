"""Collects one verdict line per acceptance criterion."""

import functools
import time

_results = {}


def criterion(num, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **kw):
            t = time.perf_counter()
            try:
                detail = fn(*a, **kw)
            except AssertionError as exc:
                _results[num] = (False, title, str(exc).splitlines()[0][:200], time.perf_counter() - t)
                raise
            _results[num] = (True, title, detail or "", time.perf_counter() - t)
        return run
    return wrap


def lines():
    out = []
    for num in sorted(_results):
        ok, title, detail, dt = _results[num]
        tail = f" -- {detail}" if detail else ""
        out.append(f"criterion {num:2d} {'PASS' if ok else 'FAIL'} [{dt:7.1f}s] {title}{tail}")
    return out
