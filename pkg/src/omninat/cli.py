"""Command line front end for quantifier queries over the conaturals.

Exit codes: 0 positive verdict, 1 negative verdict, 2 parse or usage
error, 3 step budget exhausted.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass

import click

from . import conat, dsl, search, taboo


@dataclass(frozen=True)
class Config:
    fuel: int = 10_000_000  # step budget: lazy bit evaluations allowed
    prefix_len: int = 16  # witness bits shown in reports
    output: str = "text"  # "text" | "json"


def _common(f):
    f = click.option(
        "--fuel",
        type=click.IntRange(min=1),
        default=10_000_000,
        show_default=True,
        help="Step budget: total lazy bit evaluations allowed.",
    )(f)
    f = click.option(
        "--prefix",
        "prefix_len",
        type=click.IntRange(min=1),
        default=16,
        show_default=True,
        help="Witness prefix bits to display.",
    )(f)
    f = click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")(f)
    return f


def _config(fuel: int, prefix_len: int, as_json: bool) -> Config:
    return Config(fuel, prefix_len, "json" if as_json else "text")


def _witness_json(w: conat.CoNat, cls: conat.Classification, cfg: Config) -> dict:
    if isinstance(cls, conat.Finite):
        c = {"finite": cls.value}
    else:
        c = {"atLeast": cls.fuel}
    return {"prefix": w.prefix_str(cfg.prefix_len), "classification": c}


def _emit(report: dict, cfg: Config) -> None:
    if cfg.output == "json":
        click.echo(json.dumps(report, indent=2))
        return
    click.echo(f"query: {report['query']}")
    click.echo(f"verdict: {report['verdict']}")
    if "witness" in report:
        w = report["witness"]
        click.echo(f"witness: {w['prefix']}")
        c = w["classification"]
        if "finite" in c:
            click.echo(f"classification: finite {c['finite']}")
        else:
            click.echo(f"classification: at least {c['atLeast']}")
    s = report["stats"]
    click.echo(f"stats: predicate_evals={s['predicate_evals']} bit_reads={s['bit_reads']}")


def _emit_error(query: str, message: str, cfg: Config) -> None:
    if cfg.output == "json":
        click.echo(json.dumps({"query": query, "error": message}, indent=2))
    else:
        click.echo(f"error: {message}", err=True)


def _run(query: str, cfg: Config, body) -> None:
    """Run one query under the configured budget and emit its report.

    ``body(stats)`` returns (verdict, witness-or-None, exit_code); this
    wrapper owns parsing and budget failures and the stats fields.
    """
    conat.set_step_limit(cfg.fuel)
    steps_before = conat.steps_used()
    stats = search.SearchStats()
    try:
        verdict, witness, code = body(stats)
    except (dsl.ParseError, dsl.IndexTooLargeError) as exc:
        _emit_error(query, str(exc), cfg)
        sys.exit(2)
    except conat.FuelExhausted as exc:
        _emit_error(query, str(exc), cfg)
        sys.exit(3)
    report = {"query": query, "verdict": verdict}
    if witness is not None:
        report["witness"] = witness
    report["stats"] = {
        "predicate_evals": stats.predicate_evals,
        "bit_reads": conat.steps_used() - steps_before,
    }
    _emit(report, cfg)
    sys.exit(code)


@click.group()
def main():
    """Decide predicates over the conaturals (lazy non-increasing bit
    sequences such as finite(n), with n leading ones, and the all-ones
    point omega).

    Exit codes: 0 positive verdict, 1 negative verdict, 2 parse error,
    3 step budget exhausted.
    """


@main.command("forall")
@click.argument("expr")
@_common
def forall_cmd(expr: str, fuel: int, prefix_len: int, as_json: bool):
    """Decide whether EXPR holds at every conatural.

    Reports "holds", or "counterexample" with a witness where EXPR
    evaluates to 0 (prefix shown index 0 first) and the witness's
    fuel-bounded classification.
    """
    cfg = _config(fuel, prefix_len, as_json)

    def body(stats):
        q = dsl.compile_expr(dsl.parse(expr))
        outcome = search.find_counterexample(q, stats=stats)
        if isinstance(outcome, search.HoldsEverywhere):
            return "holds", None, 0
        w = _witness_json(outcome.witness, outcome.classification, cfg)
        return "counterexample", w, 1

    _run(expr, cfg, body)


@main.command("find")
@click.argument("expr")
@_common
def find_cmd(expr: str, fuel: int, prefix_len: int, as_json: bool):
    """Search for a conatural where EXPR evaluates to 0.

    This is the existential dual of forall: "found" (exit 0) reports a
    zero of the compiled predicate, "none" (exit 1) means EXPR holds
    everywhere, so no zero exists.
    """
    cfg = _config(fuel, prefix_len, as_json)

    def body(stats):
        q = dsl.compile_expr(dsl.parse(expr))
        outcome = search.find_counterexample(q, stats=stats)
        if isinstance(outcome, search.Counterexample):
            w = _witness_json(outcome.witness, outcome.classification, cfg)
            return "found", w, 0
        return "none", None, 1

    _run(expr, cfg, body)


@main.command("classify")
@click.argument("expr")
@_common
def classify_cmd(expr: str, fuel: int, prefix_len: int, as_json: bool):
    """Classify the canonical search point of EXPR.

    Builds the selection value for EXPR (the least failing finite
    conatural, or omega when EXPR holds everywhere) and reports its
    prefix and fuel-bounded classification along with the verdict.
    Always exits 0 on success.
    """
    cfg = _config(fuel, prefix_len, as_json)

    def body(stats):
        q = dsl.compile_expr(dsl.parse(expr))
        eps = search.epsilon(q, stats)
        verdict = "holds" if q.eval(eps) == 1 else "counterexample"
        stats.predicate_evals += 1
        cls_fuel = max(search.default_classification_fuel(q), cfg.prefix_len)
        w = _witness_json(eps, conat.classify(eps, cls_fuel), cfg)
        return verdict, w, 0

    _run(expr, cfg, body)


@main.command("decide-sum")
@click.argument("name")
@_common
def decide_sum_cmd(name: str, fuel: int, prefix_len: int, as_json: bool):
    """Decide whether a built-in map into a sum ever produces Left.

    NAME is one of: all-right, left-at-zero, left-at-4bar.  "found"
    (exit 0) reports a witness sent to Left; "none" (exit 1) means the
    map only ever produces Right.
    """
    cfg = _config(fuel, prefix_len, as_json)
    maps = taboo.demo_sum_maps()
    if name not in maps:
        _emit_error(name, f"unknown builtin {name!r}; choose from {sorted(maps)}", cfg)
        sys.exit(2)

    def body(stats):
        decision = taboo.sur_decides(maps[name], stats=stats)
        if isinstance(decision, taboo.Inhabited):
            w = decision.witness
            cls = conat.classify(w, max(1024, cfg.prefix_len))
            return "found", _witness_json(w, cls, cfg), 0
        return "none", None, 1

    _run(name, cfg, body)
