"""Command-line surface: build/inspect algebras, multiply, straighten,
characters, decomposition matrices, blocks, and a runnable verification suite.

Outputs are deterministic for a fixed (config, seed): all collections are
emitted in sorted order and JSON integers are rendered as strings.  Exit
codes: 0 ok, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass

import click

from . import codeterminants as codet
from . import partitions, tableaux, triples
from .base_algebra import make_algebra, verify_heredity
from .characters import (
    ClassicalDecomp,
    DecompInput,
    LRCache,
    block_decomposition,
    blocks as linking_blocks,
    char_standard_formula,
    char_standard_tableaux,
    decomp_formula,
    decomp_oracle,
    matrix_to_dict,
)
from .rings import GF, QQ, ZZ, CoefficientRing, GradedSuperScalar
from .rsk import rsk
from .schur import build_schur


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass
class RunConfig:
    algebra: str = "zigzag:1"
    n: int = 2
    d: int = 2
    field: str = "Q"
    out: str = "json"
    method: str = "both"
    output: str | None = None
    cache_dir: str | None = None
    seed: int = 0
    threads: int = 1

    def ring(self) -> CoefficientRing:
        f = self.field
        if f == "Z":
            return ZZ
        if f == "Q":
            return QQ
        if f.startswith("Fp:"):
            return GF(int(f.split(":", 1)[1]))
        raise click.UsageError(f"unknown field {f!r} (expected Z | Q | Fp:p)")

    def lr_cache(self) -> LRCache:
        if self.cache_dir is None:
            return LRCache()
        import os

        return LRCache(os.path.join(self.cache_dir, "lr_cache.jsonl"))

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra, "n": str(self.n), "d": str(self.d),
            "field": self.field, "out": self.out, "method": self.method,
            "seed": str(self.seed), "threads": str(self.threads),
        }


def _read_config_file(path: str) -> dict:
    """KEY=VALUE per line; blank lines and #-comments ignored."""
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise click.UsageError(f"bad config line: {line!r}")
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def _build_config(ctx_obj: dict, **overrides) -> RunConfig:
    cfg = RunConfig()
    for k, v in ctx_obj.get("file_values", {}).items():
        if not hasattr(cfg, k):
            raise click.UsageError(f"unknown config key {k!r}")
        cur = getattr(cfg, k)
        setattr(cfg, k, type(cur)(v) if cur is not None else v)
    for k, v in overrides.items():
        if v is not None:
            setattr(cfg, k, v)
    return cfg


def _require_qh(cfg: RunConfig) -> None:
    if cfg.n < cfg.d:
        raise click.UsageError(
            "quasi-heredity operations need n >= d: the standard codeterminant "
            "basis is indexed by tableaux with at most n rows per column"
        )


def _emit(cfg: RunConfig, payload, csv_rows=None) -> None:
    if cfg.out == "csv":
        if csv_rows is None:
            raise click.UsageError("csv output not available for this command")
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(csv_rows)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def scalar_str(g: GradedSuperScalar) -> str:
    """Human/CSV form: '+'-joined monomials c*q^m*pi^eps."""
    if not g:
        return "0"
    parts = []
    for (m, eps), c in sorted(g.coeffs.items()):
        toks = []
        if c != 1 or (m == 0 and eps == 0):
            toks.append(str(c))
        if m:
            toks.append("q" if m == 1 else f"q^{m}")
        if eps:
            toks.append("pi")
        parts.append("*".join(toks))
    return "+".join(parts)


def _element_json(T, x) -> list:
    return [
        {"orbit": triples.TriContext.to_json(o), "coeff": str(c)}
        for o, c in sorted(x.items(), key=lambda kv: T.index.get(kv[0], -1))
        if c
    ]


def _make_T(cfg: RunConfig):
    # the cellular truncation only exists inside the ambient algebra, so it
    # is built there and cut down at the Schur level
    if cfg.algebra.startswith("zigzag-bar:"):
        ell = int(cfg.algebra.split(":", 1)[1])
        alg, data, tau = make_algebra(f"zigzag:{ell}")
        return build_schur(alg, data, cfg.n, cfg.d, tau).truncate(range(ell))
    alg, data, tau = make_algebra(cfg.algebra)
    return build_schur(alg, data, cfg.n, cfg.d, tau)


def _label_from_json(text: str, n_labels: int):
    lam = partitions.from_json(json.loads(text))
    if len(lam) > n_labels:
        raise click.UsageError("label has more components than the base has colors")
    return lam + ((),) * (n_labels - len(lam))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _common(f):
    f = click.option("--algebra", default=None, help="zigzag:L | zigzag-bar:L | trivial | semisimple:m")(f)
    f = click.option("-n", type=int, default=None)(f)
    f = click.option("-d", type=int, default=None)(f)
    f = click.option("--field", default=None, help="Z | Q | Fp:p")(f)
    f = click.option("--out", type=click.Choice(["json", "csv"]), default=None)(f)
    f = click.option("--output", default=None, help="write to file instead of stdout")(f)
    f = click.option("--cache-dir", default=None)(f)
    f = click.option("--seed", type=int, default=None)(f)
    f = click.option("--threads", type=int, default=None)(f)
    return f


@click.group()
@click.option("--config", default=None, help="KEY=VALUE config file; flags override")
@click.pass_context
def main(ctx, config):
    """Exact computations in generalized Schur algebras."""
    ctx.ensure_object(dict)
    ctx.obj["file_values"] = _read_config_file(config) if config else {}


@main.command()
@_common
@click.pass_context
def build(ctx, **kw):
    """Construct the algebra and report its shape."""
    cfg = _build_config(ctx.obj, **kw)
    T = _make_T(cfg)
    labels = partitions.gen_multipartitions(cfg.n, cfg.d, len(T.data.labels) - 1)
    _emit(cfg, {
        "config": cfg.to_json(),
        "base_dim": str(T.alg.dim),
        "rank": str(T.rank),
        "labels": [partitions.to_json(l) for l in labels],
    })


@main.command()
@_common
@click.pass_context
def dim(ctx, **kw):
    """Rank of the algebra (number of canonical orbits)."""
    cfg = _build_config(ctx.obj, **kw)
    T = _make_T(cfg)
    _emit(cfg, {"rank": str(T.rank)}, csv_rows=[[T.rank]])


@main.command()
@_common
@click.option("--left", required=True, help="orbit word as JSON [{b,r,s},...]")
@click.option("--right", required=True, help="orbit word as JSON")
@click.pass_context
def mul(ctx, left, right, **kw):
    """Product of two basis elements on the divided-power basis."""
    cfg = _build_config(ctx.obj, **kw)
    T = _make_T(cfg)
    x = T.eta(triples.TriContext.from_json(json.loads(left)))
    y = T.eta(triples.TriContext.from_json(json.loads(right)))
    prod = T.mul(x, y)
    _emit(cfg, _element_json(T, prod),
          csv_rows=[[json.dumps(triples.TriContext.to_json(o)), str(c)]
                    for o, c in sorted(prod.items(), key=lambda kv: T.index[kv[0]])])


@main.command()
@_common
@click.option("--orbit", required=True, help="orbit word as JSON [{b,r,s},...]")
@click.option("--backend", type=click.Choice(["recursive", "solve", "both"]), default="both")
@click.pass_context
def straighten(ctx, orbit, backend, **kw):
    """Expand a basis element over standard codeterminants."""
    cfg = _build_config(ctx.obj, **kw)
    _require_qh(cfg)
    T = _make_T(cfg)
    word = triples.TriContext.from_json(json.loads(orbit))
    rep, sign = T.ctx.canonicalize(word, strict=True)
    results = {}
    if backend in ("solve", "both"):
        results["solve"] = codet.CodetBasis(T).solve({rep: sign})
    if backend in ("recursive", "both"):
        results["recursive"] = codet.Straightener(T).straighten_element({rep: sign})
    if backend == "both" and results["solve"] != results["recursive"]:
        _emit(cfg, {"error": "straightening backends disagree",
                    "orbit": triples.TriContext.to_json(rep)})
        sys.exit(1)
    expansion = results.get("solve", results.get("recursive"))
    payload = [
        {"shape": partitions.to_json(key[0]),
         "S": tableaux.to_json(key[1]),
         "T": tableaux.to_json(key[2]),
         "coeff": str(c)}
        for key, c in sorted(expansion.items(), key=lambda kv: repr(kv[0]))
        if c
    ]
    _emit(cfg, payload,
          csv_rows=[[json.dumps(e["shape"]), json.dumps(e["S"]),
                     json.dumps(e["T"]), e["coeff"]] for e in payload])


@main.command()
@_common
@click.option("--label", required=True, help="multipartition as JSON [[...],[...]]")
@click.option("--method", type=click.Choice(["tableaux", "formula", "both"]), default=None)
@click.pass_context
def char(ctx, label, method, **kw):
    """Graded character of a standard module."""
    cfg = _build_config(ctx.obj, method=method, **kw)
    T = _make_T(cfg)
    lam = _label_from_json(label, len(T.data.labels))
    cache = cfg.lr_cache()
    vecs = {}
    if cfg.method in ("tableaux", "both"):
        vecs["tableaux"] = char_standard_tableaux(T, lam)
    if cfg.method in ("formula", "both"):
        vecs["formula"] = char_standard_formula(T, lam, cache)
    if cfg.method == "both" and vecs["tableaux"] != vecs["formula"]:
        _emit(cfg, {"error": "character methods disagree", "label": partitions.to_json(lam)})
        sys.exit(1)
    vec = vecs.get("tableaux", vecs.get("formula"))
    rows = [(w, scalar_str(c)) for w, c in sorted(vec.items())]
    _emit(cfg, [{"weight": [list(comp) for comp in w], "coeff": s} for w, s in rows],
          csv_rows=[[json.dumps([list(comp) for comp in w]), s] for w, s in rows])


@main.command()
@_common
@click.option("--method", type=click.Choice(["formula", "oracle", "both"]), default=None)
@click.pass_context
def decomp(ctx, method, **kw):
    """Graded decomposition matrix, by formula, oracle, or both (compared)."""
    cfg = _build_config(ctx.obj, method=method, **kw)
    _require_qh(cfg)
    ring = cfg.ring()
    if not ring.is_field:
        raise click.UsageError("decomposition numbers need a field: Q or Fp:p")
    T = _make_T(cfg)
    labels = partitions.gen_multipartitions(cfg.n, cfg.d, len(T.data.labels) - 1)
    cache = cfg.lr_cache()
    matrices = {}
    if cfg.method in ("oracle", "both"):
        matrices["oracle"] = matrix_to_dict(decomp_oracle(T, ring))
    if cfg.method in ("formula", "both"):
        inp = DecompInput.from_base(T.alg, T.data)
        classical = None if ring == QQ else ClassicalDecomp(cfg.n, ring)
        fm = {}
        for lam in labels:
            for mu in labels:
                v = decomp_formula(inp, lam, mu, cfg.n, classical, cache)
                if v:
                    fm[(lam, mu)] = v
        matrices["formula"] = fm
    if cfg.method == "both" and matrices["formula"] != matrices["oracle"]:
        diff = sorted(
            repr(k) for k in set(matrices["formula"]) ^ set(matrices["oracle"])
            | {k for k in matrices["formula"] if matrices["formula"][k] != matrices["oracle"].get(k)}
        )
        _emit(cfg, {"error": "formula and oracle disagree", "witnesses": diff[:10]})
        sys.exit(1)
    mat = matrices.get("oracle", matrices.get("formula"))
    rows = [
        (partitions.to_json(lam), partitions.to_json(mu),
         scalar_str(mat.get((lam, mu), GradedSuperScalar.zero())))
        for lam in labels for mu in labels
    ]
    _emit(cfg, [{"lam": l, "mu": m, "entry": e} for l, m, e in rows],
          csv_rows=[[json.dumps(l), json.dumps(m), e] for l, m, e in rows])


@main.command()
@_common
@click.pass_context
def blocks(ctx, **kw):
    """Linking-graph blocks and the coarse base-block decomposition."""
    cfg = _build_config(ctx.obj, **kw)
    _require_qh(cfg)
    ring = cfg.ring()
    if not ring.is_field:
        raise click.UsageError("block detection needs a field: Q or Fp:p")
    T = _make_T(cfg)
    D = decomp_oracle(T, ring)
    fine = linking_blocks(D.labels, matrix_to_dict(D))
    coarse = block_decomposition(T.alg, T.data, cfg.n, cfg.d)
    _emit(cfg, {
        "linking_blocks": [[partitions.to_json(l) for l in blk] for blk in fine],
        "base_block_decomposition": [
            {"sizes": [str(s) for s in nu], "labels": [partitions.to_json(l) for l in labs]}
            for nu, labs in coarse.items()
        ],
    })


@main.command()
@_common
@click.pass_context
def verify(ctx, **kw):
    """Run the invariant suite and print a pass/fail table."""
    cfg = _build_config(ctx.obj, **kw)
    T = _make_T(cfg)
    rng = random.Random(cfg.seed)
    cache = cfg.lr_cache()
    results: list[tuple[str, bool, str]] = []

    def check(name: str, fn):
        try:
            witness = fn()
            results.append((name, True, witness or ""))
        except Exception as e:  # any failure is a verification failure
            results.append((name, False, f"{type(e).__name__}: {e}"))

    def c_unit():
        one = T.unit()
        for o in rng.sample(T.orbits, min(20, T.rank)):
            x = {o: 1}
            assert T.mul(one, x) == x and T.mul(x, one) == x
        return f"{min(20, T.rank)} samples"

    def c_assoc():
        m = min(60, T.rank)
        for _ in range(m):
            a, b, c = (rng.choice(T.orbits) for _ in range(3))
            lhs = T.mul(T.mult_orbits(a, b), {c: 1})
            rhs = T.mul({a: 1}, T.mult_orbits(b, c))
            assert lhs == rhs
        return f"{m} triples"

    def c_rank():
        if T.n < T.d:
            return "skipped (n < d)"
        if T.keep_basis is not None:
            # truncation: compare against the cellular pair count in the
            # ambient algebra
            ell = int(cfg.algebra.split(":", 1)[1])
            alg, data, tau = make_algebra(f"zigzag:{ell}")
            ambient = build_schur(alg, data, cfg.n, cfg.d, tau)
            cells = codet.cellular_basis(ambient, range(ell))
            assert len(cells) == T.rank, (len(cells), T.rank)
            return f"rank {T.rank} == cellular pair count"
        total = 0
        cb = codet.CodetBasis(T)
        for bold in cb.shapes:
            total += len(cb.std_x[bold]) * len(cb.std_y[bold])
        assert total == T.rank, (total, T.rank)
        for o in rng.sample(T.orbits, min(30, T.rank)):
            bold, S, Tb = rsk(T.ctx, o)
        return f"rank {T.rank} two ways"

    def c_straighten():
        if T.n < T.d:
            return "skipped (n < d)"
        cb = codet.CodetBasis(T)
        st = codet.Straightener(T)
        sample = rng.sample(T.orbits, min(25, T.rank))
        for o in sample:
            assert cb.solve({o: 1}) == st.straighten_element({o: 1})
        return f"{len(sample)} orbits, both backends"

    def c_heredity_base():
        rep = verify_heredity(T.alg, T.data)
        assert rep.ok, rep.failures
        return "axioms (a)-(c)"

    def c_heredity_T():
        if T.n < T.d:
            return "skipped (n < d)"
        rep = codet.heredity_of_T(T, sample_b=10)
        assert rep.ok, rep.failures
        return "axioms (a)-(c)"

    def c_chars():
        labels = partitions.gen_multipartitions(T.n, T.d, len(T.data.labels) - 1)
        for lam in labels:
            a = char_standard_tableaux(T, lam)
            b = char_standard_formula(T, lam, cache)
            assert a == b, lam
        return f"{len(labels)} labels, two methods"

    def c_decomp():
        if T.n < T.d:
            return "skipped (n < d)"
        ring = cfg.ring()
        if not ring.is_field:
            ring = QQ
        D = decomp_oracle(T, ring)
        inp = DecompInput.from_base(T.alg, T.data)
        classical = None if ring == QQ else ClassicalDecomp(T.n, ring)
        for lam in D.labels:
            for mu in D.labels:
                f = decomp_formula(inp, lam, mu, T.n, classical, cache)
                assert f == D.entry(lam, mu), (lam, mu)
        return f"{len(D.labels)}x{len(D.labels)} formula == oracle over {ring!r}"

    def c_involution():
        if T.tau is None:
            return "skipped (no anti-involution)"

        def signed(x):
            # relabeling involution times the tensor-reversal sign; the
            # composite is a plain anti-automorphism
            out = {}
            for o, c in x.items():
                j = sum(T.alg.parity[b] for (b, _r, _s) in o)
                sgn = -1 if (j * (j - 1) // 2) % 2 else 1
                for k, v in T.involution({o: 1}).items():
                    out[k] = out.get(k, 0) + sgn * c * v
            return {k: v for k, v in out.items() if v}

        m = min(40, T.rank)
        for _ in range(m):
            a, b = rng.choice(T.orbits), rng.choice(T.orbits)
            assert T.involution(T.involution({a: 1})) == {a: 1}
            lhs = signed(T.mult_orbits(a, b))
            rhs = T.mul(signed({b: 1}), signed({a: 1}))
            assert lhs == rhs
        return f"anti-automorphism on {m} pairs"

    check("unit", c_unit)
    check("associativity", c_assoc)
    check("rank", c_rank)
    check("involution", c_involution)
    # the cellular-only truncation is not quasi-hereditary; skip the
    # highest-weight checks for it
    qh = not cfg.algebra.startswith("zigzag-bar")
    if qh:
        check("straightening", c_straighten)
        check("base heredity", c_heredity_base)
        check("schur heredity", c_heredity_T)
        check("characters", c_chars)
        try:
            DecompInput.from_base(T.alg, T.data)
            basic = True
        except ValueError:
            basic = False
        if basic:
            check("decomposition", c_decomp)

    width = max(len(n) for n, _ok, _w in results)
    for name, ok, witness in results:
        click.echo(f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}  {witness}")
    if not all(ok for _n, ok, _w in results):
        sys.exit(1)


if __name__ == "__main__":
    main()
