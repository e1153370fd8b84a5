import pytest

import legkh.complex as complex_module
from legkh.checks import run_checks

from conftest import oriented


def wrong_split_targets(tr, bits, mask):
    """Like the real rule, except a split of + yields only one of its two terms."""
    for x in range(tr.n):
        if bits >> x & 1:
            continue
        t, kind, keep, a, b = tr.edge(bits, x)
        base = 0
        for u, v in keep:
            if mask >> u & 1:
                base |= 1 << v
        if kind == "merge":
            la, lb = mask >> a[0] & 1, mask >> a[1] & 1
            if la and lb:
                yield t, base | 1 << b, x
            elif la or lb:
                yield t, base, x
        elif mask >> a & 1:
            yield t, base | 1 << b[0], x
        else:
            yield t, base, x


@pytest.fixture
def broken_split(monkeypatch):
    monkeypatch.setattr(complex_module, "_targets", wrong_split_targets)


@pytest.mark.parametrize("name", ["unknot", "stab2_unknot", "rh_trefoil", "lh_trefoil"])
def test_corpus_passes(name):
    results = run_checks(oriented(name), walks=3, steps=3, seed=1)
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]
    assert len(results) == 9


def test_zero_steps_skip_walks():
    results = run_checks(oriented("hopf", [1]), walks=5, steps=0)
    assert all(r.ok for r in results)
    assert not any("walk" in r.name for r in results)


def test_wrong_split_rule_fails_d_squared(broken_split):
    results = run_checks(oriented("rh_trefoil"), walks=2, steps=2)
    failed = {r.name for r in results if not r.ok}
    assert {"d^2 = 0 over Z2", "d^2 = 0 over Z"} <= failed


def test_wrong_split_rule_on_crossingless_front_gives_counterexample(broken_split):
    results = run_checks(oriented("unknot"), walks=2, steps=2)
    (bad,) = [r for r in results if not r.ok]
    assert bad.name.startswith("invariance along")
    # The dump names one move and the words before and after it.
    assert bad.detail.startswith("seed ")
    assert "turns [L 1 R 1" in bad.detail or " turns [" in bad.detail
    assert bad.line().startswith("FAIL ")
