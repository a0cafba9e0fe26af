"""
Command line for the engine: every command reads a definition file (or a bundled one by
name) and prints a report; exit status 0 on success, 1 on a false verdict and 2 on
input errors.

"""

import functools
import logging
import os
from dataclasses import replace
from typing import Dict, List, Optional

import click
import numpy as np
from rich.console import Console
from rich.table import Table

from hopfcyc import library
from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import (
    AModObject,
    ComoduleAlgebra,
    bar_stage,
    hom_A,
    hom_A_colinear,
    regular_algebra,
    replacement_sequence,
    total_integral,
    validate_algebra,
    validate_algebra_and_module,
)
from hopfcyc.algebra.comod import (
    ColinearMap,
    Comodule,
    frobenius_generator,
    hom_colinear,
    is_colinear,
    validate_comodule,
)
from hopfcyc.algebra.hopf_core import (
    HopfAlgebra,
    StructureError,
    cofrobenius_data,
    integral_space,
    right_integral_holds,
    validate_hopf,
)
from hopfcyc.algebra.stable_cat import (
    cofree_desuspension,
    desuspend,
    desuspension_of_suspension_comparison,
    is_stable_equivalence,
    mapping_cocylinder,
    mapping_cylinder,
    stable_hom,
    suspend,
    suspension_comparison,
    triangle,
)
from hopfcyc.arguments import EngineArgs
from hopfcyc.cli.definitions import DefinitionError, Definitions, NamedMap, load
from hopfcyc.cli.report import Report, format_vector
from hopfcyc.cyclic.cyclic_cat import (
    TAGS,
    check_identities,
    cyclic_identities,
    evaluate,
    identity_defect,
    normalize,
    random_word,
    parse_word,
)
from hopfcyc.cyclic.homology import cyclic_bar_construction, cyclic_from_cyclic_module
from hopfcyc.cyclic.hopf_cyclic import (
    StableModComod,
    build_T,
    characteristic_map,
    coapproximation,
    coapproximation_oracle,
    coinvariant_part,
    cyclic_structure,
    hopf_bialgebra,
    hopf_module_vanishing_check,
    validate_bialgebra_in_comod,
    validate_stable_pair,
    verify_pseudo_para_cyclic,
)
from hopfcyc.logging import TableLogger, setup_logging

FILE = click.argument("path")


def engine_command(group, name: str):
    """Registers a command that takes the engine options and returns a Report."""

    def decorator(func):
        @group.command(name)
        @click.option("--config", default=None, help="EngineArgs JSON file.")
        @click.option("--max-degree", type=int, default=None)
        @click.option("--field", "field_", default=None, help="rational or prime:p")
        @click.option("--jobs", type=int, default=None)
        @click.option("--seed", type=int, default=None)
        @click.option("--verbose", "-v", is_flag=True, default=False)
        @functools.wraps(func)
        def command(config, max_degree, field_, jobs, seed, verbose, **kwargs):
            ctx = click.get_current_context()
            overrides = {
                k: v
                for k, v in dict(
                    max_degree=max_degree,
                    field=field_,
                    jobs=jobs,
                    seed=seed,
                    verbose=verbose or None,
                ).items()
                if v is not None
            }
            try:
                if config:
                    args = EngineArgs.from_json(config, **overrides)
                else:
                    args = EngineArgs.from_overrides(overrides)
                if args.verbose:
                    setup_logging(level=logging.DEBUG)
                report = func(args, **kwargs)
                if not args.verbose:
                    report.witnesses = {}
            except (DefinitionError, StructureError, ValueError, TypeError, OSError) as error:
                click.echo(f"error: {error}", err=True)
                ctx.exit(2)
            click.echo(report.render(args.verbose), nl=False)
            ctx.exit(report.exit_code)

        return command

    return decorator


def _load(path: str, args: EngineArgs) -> Definitions:
    return load(library.resolve(path), args.field)


def _echo(*parts) -> List[str]:
    echoed = []
    for part in parts:
        if part is None:
            continue
        echoed.append(os.path.basename(part) if part.endswith(library.EXTENSION) else str(part))
    return echoed


def _named(defs: Definitions, name: Optional[str], kind: str):
    return defs.get(name or defs.first(kind), kind)


def _hopf(defs: Definitions, name: Optional[str]) -> HopfAlgebra:
    if name is None:
        return _named(defs, None, "hopf")
    obj = defs.get(name)
    if isinstance(obj, HopfAlgebra):
        return obj
    if isinstance(obj, (Comodule, ComoduleAlgebra, AModObject, StableModComod)):
        return defs.comodule_of(name).hopf
    raise DefinitionError("has no Hopf algebra", name=name)


def _algebra(defs: Definitions, name: Optional[str]) -> ComoduleAlgebra:
    """An algebra block, or a Hopf algebra taken as its own regular algebra."""
    if name is None:
        if defs.names("algebra"):
            return _named(defs, None, "algebra")
        return regular_algebra(_named(defs, None, "hopf"))
    obj = defs.get(name)
    if isinstance(obj, ComoduleAlgebra):
        return obj
    if isinstance(obj, HopfAlgebra):
        return regular_algebra(obj)
    raise DefinitionError("is not an algebra", name=name)


def _map(defs: Definitions, name: str) -> ColinearMap:
    named: NamedMap = defs.get(name, "map")
    return ColinearMap(defs.comodule_of(named.source), defs.comodule_of(named.target), named.matrix)


def _failures(report) -> str:
    return ", ".join(report.shape_errors + report.failures)


@click.group()
def cli():
    pass


@engine_command(cli, "validate")
@FILE
@click.argument("names", nargs=-1)
def validate(args, path, names):
    """Checks the structure identities of the objects in a file."""
    defs = _load(path, args)
    report = Report(_echo("validate", path, *names))
    for name in names or defs.names():
        obj, kind = defs.get(name), defs.kinds[name]
        if kind == "hopf":
            result = validate_hopf(obj)
        elif kind == "comodule":
            result = validate_comodule(obj)
        elif kind == "algebra":
            result = validate_bialgebra_in_comod(obj) if obj.has_bialgebra else validate_algebra(obj)
        elif kind == "module":
            result = validate_algebra_and_module(obj.algebra, obj)
        elif kind == "stable":
            result = validate_stable_pair(obj)
        else:
            m = _map(defs, name)
            report.verdict(name, m.is_colinear())
            if not m.is_colinear():
                report.note(f"{name}: not colinear")
            continue
        report.verdict(name, result.ok)
        if not result.ok:
            report.note(f"{name}: {_failures(result)}")
    return report


@engine_command(cli, "integral")
@FILE
@click.argument("name", required=False)
def integral(args, path, name):
    """The space of left integrals and the right integral Λ′ = Λ∘S."""
    defs = _load(path, args)
    h = _hopf(defs, name)
    basis = integral_space(h)
    labels = [f"δ_{label}" for label in h.space.labels]
    report = Report(_echo("integral", path, name)).value("dimension", len(basis))
    report.value("basis", [format_vector(row.transpose(), labels, defs.field) for row in basis])
    report.verdict("unique", len(basis) == 1)
    if len(basis) == 1:
        data = cofrobenius_data(h)
        report.value("left", format_vector(data.left.transpose(), labels, defs.field))
        report.value("right", format_vector(data.right.transpose(), labels, defs.field))
        report.verdict("right_integral", right_integral_holds(h, data.right))
    return report


@engine_command(cli, "cofrobenius")
@FILE
@click.argument("name", required=False)
def cofrobenius(args, path, name):
    defs = _load(path, args)
    h = _hopf(defs, name)
    data = cofrobenius_data(h)
    report = Report(_echo("cofrobenius", path, name)).verdict("cofrobenius", data.is_cofrobenius)
    report.value("x", data.x_label)
    report.value("right integral at x", defs.field.format(data.right_at_x))
    generator = frobenius_generator(h)
    report.value(
        "frobenius generator",
        "none" if generator is None else format_vector(generator.element, h.space.labels, defs.field),
    )
    return report


@engine_command(cli, "hom")
@FILE
@click.argument("source")
@click.argument("target")
def hom(args, path, source, target):
    """Colinear maps, and A-linear ones when both objects are A-modules."""
    defs = _load(path, args)
    M, N = defs.comodule_of(source), defs.comodule_of(target)
    basis = hom_colinear(M, N)
    report = Report(_echo("hom", path, source, target)).value("dim Hom^H", len(basis))
    m_obj, n_obj = defs.get(source), defs.get(target)
    if isinstance(m_obj, AModObject) and isinstance(n_obj, AModObject):
        report.value("dim Hom_A", len(hom_A(m_obj, n_obj)))
        basis = hom_A_colinear(m_obj, n_obj)
        report.value("dim Hom_A^H", len(basis))
    for k, f in enumerate(basis):
        report.witness(f"basis {k}", f, defs.field)
    return report


@engine_command(cli, "stable-hom")
@FILE
@click.argument("source")
@click.argument("target")
def stable_hom_command(args, path, source, target):
    defs = _load(path, args)
    space = stable_hom(defs.comodule_of(source), defs.comodule_of(target))
    report = Report(_echo("stable-hom", path, source, target))
    report.value("dim Hom^H", space.ambient_dim)
    report.value("dim stably trivial", space.trivial_dim)
    report.value("dim stable Hom", space.quotient_dim)
    for k, f in enumerate(space.trivial_maps()):
        report.witness(f"trivial {k}", f, defs.field)
    return report


@engine_command(cli, "stable-equiv")
@FILE
@click.argument("name")
@click.option(
    "--canonical",
    is_flag=True,
    default=False,
    help="Test the canonical map NAME → Σ⁻¹ΣNAME instead of a declared map.",
)
def stable_equiv(args, path, name, canonical):
    defs = _load(path, args)
    if canonical:
        f = desuspension_of_suspension_comparison(defs.comodule_of(name))
    else:
        f = _map(defs, name)
    report = Report(_echo("stable-equiv", path, name, "--canonical" if canonical else None))
    report.verdict("colinear", f.is_colinear())
    if not f.is_colinear():
        return report
    result = is_stable_equivalence(f)
    report.verdict("stable_equivalence", result.equivalence)
    if result.equivalence:
        report.witness("inverse", result.inverse, defs.field)
    return report


@engine_command(cli, "suspend")
@FILE
@click.argument("name")
def suspend_command(args, path, name):
    """ΣM, checked against the cofree shift T(M)."""
    defs = _load(path, args)
    M = defs.comodule_of(name)
    shift = suspend(M)
    report = Report(_echo("suspend", path, name))
    report.value("dim M", M.dim).value("dim M*H", shift.ambient.dim)
    report.value("dim SM", shift.object.dim)
    report.verdict("exact", shift.is_exact())
    report.verdict("colinear", is_colinear(shift.projection, shift.ambient, shift.object))
    report.verdict("matches_cofree_shift", is_stable_equivalence(suspension_comparison(M)).equivalence)
    report.witness("coaction", shift.object.coaction, defs.field)
    return report


@engine_command(cli, "desuspend")
@FILE
@click.argument("name")
def desuspend_command(args, path, name):
    defs = _load(path, args)
    M = defs.comodule_of(name)
    shift = desuspend(M)
    report = Report(_echo("desuspend", path, name))
    report.value("dim M", M.dim).value("dim M*H", shift.ambient.dim)
    report.value("dim S^-1M", shift.object.dim)
    report.value("dim T^-1M", cofree_desuspension(M).object.dim)
    report.verdict("exact", shift.is_exact())
    report.verdict("colinear", is_colinear(shift.inclusion, shift.object, shift.ambient))
    unit = desuspension_of_suspension_comparison(M)
    report.verdict("unit_is_stable_equivalence", is_stable_equivalence(unit).equivalence)
    report.witness("coaction", shift.object.coaction, defs.field)
    return report


@engine_command(cli, "cylinder")
@FILE
@click.argument("name")
def cylinder(args, path, name):
    """Mapping cylinder of a declared map and its triangle."""
    defs = _load(path, args)
    f = _map(defs, name)
    cyl = mapping_cylinder(f)
    report = Report(_echo("cylinder", path, name)).value("dim C_f", cyl.object.dim)
    report.verdict("exact", cyl.is_exact())
    report.verdict("split", cyl.is_split())
    for check, holds in triangle(f).check().items():
        report.verdict(f"triangle {check}", holds)
    report.witness("retraction", cyl.retraction, defs.field)
    return report


@engine_command(cli, "cocylinder")
@FILE
@click.argument("name")
def cocylinder(args, path, name):
    defs = _load(path, args)
    cocyl = mapping_cocylinder(_map(defs, name))
    report = Report(_echo("cocylinder", path, name)).value("dim P_f", cocyl.object.dim)
    report.verdict("exact", cocyl.is_exact())
    report.verdict("split", cocyl.is_split())
    report.witness("section", cocyl.section, defs.field)
    return report


@engine_command(cli, "bar")
@FILE
@click.argument("name", required=False)
@click.option("--degree", type=int, default=None, help="Stage C_n; defaults to bar_truncation.")
def bar(args, path, name, degree):
    """Bar stages C_0 ⊂ … ⊂ C_n with their filtration."""
    defs = _load(path, args)
    a = _algebra(defs, name)
    n = args.bar_truncation if degree is None else degree
    stage = bar_stage(a, n, truncation=args.bar_truncation, verbose=args.verbose)
    report = Report(_echo("bar", path, name, f"--degree={n}"))
    report.value("stage dims", [s.dim for s in stage.stages])
    report.table("filtration", stage.table())
    report.verdict("certified", stage.certified)
    report.verdict("injective", bool(stage.injective))
    replacement = replacement_sequence(stage)
    report.value("dim pbar", replacement.cokernel.dim)
    report.value("dim p", replacement.desuspended.dim)
    return report


@engine_command(cli, "total-integral")
@FILE
@click.argument("name", required=False)
def total_integral_command(args, path, name):
    defs = _load(path, args)
    a = _algebra(defs, name)
    phi = total_integral(a)
    report = Report(_echo("total-integral", path, name)).verdict("exists", phi is not None)
    if phi is not None:
        report.witness("phi", phi, defs.field)
    return report


@cli.group("cyclic")
def cyclic_group():
    """The pseudo-para-cyclic comodule T(A, M) of a stable pair."""


def _build(defs: Definitions, pair_name: Optional[str], args: EngineArgs):
    pair = _named(defs, pair_name, "stable")
    return pair, build_T(pair.algebra, pair, args.max_degree, args.jobs, args.verbose)


@engine_command(cyclic_group, "build")
@FILE
@click.argument("pair", required=False)
def cyclic_build(args, path, pair):
    defs = _load(path, args)
    m, T = _build(defs, pair, args)
    report = Report(_echo("cyclic", "build", path, pair)).value("max degree", T.max_degree)
    report.table("dimensions", T.table())
    report.verdict("colinear", not T.colinearity_failures)
    report.value("stable", m.is_stable())
    for failure in T.colinearity_failures:
        report.note(f"not colinear: {failure}")
    return report


@engine_command(cyclic_group, "check")
@FILE
@click.argument("pair", required=False)
def cyclic_check(args, path, pair):
    """Simplicial and pseudo-para-cyclic identities; the para-cyclic ones are reported."""
    defs = _load(path, args)
    _, T = _build(defs, pair, args)
    result = verify_pseudo_para_cyclic(T)
    report = Report(_echo("cyclic", "check", path, pair))
    report.verdict("pseudo_para_cyclic", result.pseudo_para)
    report.value("para_cyclic", result.para)
    table = TableLogger("identities")
    for family, counts in result.identities.by_family.items():
        table.log({"family": family, "held": counts["held"], "failed": counts["failed"]})
    report.table("identities", table)
    for failed in result.identities.failed if args.verbose else ():
        report.witness(failed, _defect_by_name(T, failed), defs.field)
    return report


def _defect_by_name(T, name: str) -> el.Matrix:
    for n in range(T.max_degree + 1):
        for identity in cyclic_identities(n, T.max_degree):
            if identity.name == name:
                return identity_defect(identity, T)
    raise ValueError(f"Unknown identity {name}.")


@engine_command(cyclic_group, "upgrade")
@FILE
@click.argument("pair", required=False)
def cyclic_upgrade(args, path, pair):
    """Adds t⁻¹ and certifies the cyclic relations."""
    defs = _load(path, args)
    m, T = _build(defs, pair, args)
    upgrade = cyclic_structure(T, hopf_bialgebra(m.algebra), m)
    report = Report(_echo("cyclic", "upgrade", path, pair)).verdict("cyclic", upgrade.ok)
    for name, holds in upgrade.certificates.items():
        report.value(f"certificate {name}", holds)
    if upgrade.reason:
        report.note(upgrade.reason)
    return report


@engine_command(cli, "coapprox")
@FILE
@click.argument("pair", required=False)
@click.option("--oracle", is_flag=True, default=False, help="Compare with the brute-force oracle.")
def coapprox(args, path, pair, oracle):
    """The cyclic coapproximation Q(A, M) ⊆ T(A, M)."""
    defs = _load(path, args)
    _, T = _build(defs, pair, args)
    Q = coapproximation(T, args.verbose)
    report = Report(_echo("coapprox", path, pair, "--oracle" if oracle else None))
    report.table("dimensions", Q.table(T))
    report.value("sweeps", Q.sweeps)
    report.verdict("cyclic", check_identities(Q.structure).ok)
    if oracle:
        brute = coapproximation_oracle(T)
        report.verdict(
            "maximal", all(el.same_span(brute[n], Q.inclusions[n]) for n in brute)
        )
    report.note(f"degree {T.max_degree} is provisional")
    return report


@engine_command(cli, "charmap")
@FILE
@click.argument("name", required=False)
def charmap(args, path, name):
    """Q(A, k) → Q(A, A) induced by the unit of A."""
    defs = _load(path, args)
    a = hopf_bialgebra(_algebra(defs, name))
    result = characteristic_map(a, args.max_degree, args.jobs, args.verbose)
    report = Report(_echo("charmap", path, name))
    table = TableLogger("characteristic map")
    for n, component in result.components.items():
        table.log(
            {
                "degree": n,
                "dim Q(A,k)": component.shape[1],
                "dim Q(A,A)": component.shape[0],
                "rank": el.rank(component),
                "rank on coinvariants": el.rank(result.coinvariant_components[n]),
            }
        )
    report.table("components", table)
    report.verdict("commutes", result.commutes)
    report.verdict("colinear", result.colinear)
    report.verdict("coinvariants_commute", result.coinvariant_commutes)
    return report


@engine_command(cli, "hc")
@FILE
@click.argument("name", required=False)
@click.option("--range", "range_", type=int, default=None, help="Highest degree reported.")
@click.option("--pair", default=None, help="Use Q(A, M) of this stable pair.")
@click.option("--coinvariant", is_flag=True, default=False, help="Restrict to H-coinvariants.")
@click.option("--connes/--no-connes", default=None, help="Add the Connes complex path.")
def hc(args, path, name, range_, pair, coinvariant, connes):
    """Cyclic homology through the bicomplex, the mixed complex and Connes' complex."""
    defs = _load(path, args)
    top = (args.max_degree - 1 if range_ is None else range_) + 1
    if pair is not None:
        m = _named(defs, pair, "stable")
        X = coapproximation(build_T(m.algebra, m, top, args.jobs, args.verbose)).structure
    else:
        X = cyclic_bar_construction(_algebra(defs, name), top, args.jobs, args.verbose)
    if coinvariant:
        X, _ = coinvariant_part(X)
    result = cyclic_from_cyclic_module(X, connes)
    report = Report(
        _echo("hc", path, name, f"--range={top - 1}", pair and f"--pair={pair}",
              "--coinvariant" if coinvariant else None)
    )
    report.value("HC", [result.dims[n] for n in range(result.reliable + 1)])
    report.value("HH", [result.hochschild[n] for n in range(result.reliable + 1)])
    report.table("homology", result.table())
    for identity, holds in result.identities.items():
        report.verdict(identity, holds)
    report.verdict("paths_agree", result.paths_agree)
    return report


@cli.group("word")
def word_group():
    """Words in the cyclic category."""


@engine_command(word_group, "normalize")
@click.argument("text")
@click.option("--tag", type=click.Choice(TAGS), default="lambda")
def word_normalize(args, text, tag):
    w = parse_word(text, tag)
    form = normalize(w)
    report = Report(["word", "normalize", text, f"--tag={tag}"])
    report.value("source", form.source).value("target", form.target)
    report.value("normal form", str(form))
    report.value("cyclic power", form.cyclic_power)
    report.value("faces", list(form.faces)).value("degeneracies", list(form.degeneracies))
    report.value("rewrites", form.steps)
    return report


def _degrees(w) -> int:
    return max([w.source] + [max(g.degree, g.target) for g in w.letters])


@engine_command(word_group, "eval")
@FILE
@click.argument("text")
@click.option("--pair", default=None, help="Evaluate on Q(A, M) instead of the cyclic bar construction.")
@click.option("--algebra", "name", default=None)
def word_eval(args, path, text, pair, name):
    """The matrix of a word, compared with the matrix of its normal form."""
    defs = _load(path, args)
    w = parse_word(text, "lambda")
    top = max(args.max_degree, _degrees(w), 1)
    if pair is not None:
        m = _named(defs, pair, "stable")
        X = coapproximation(build_T(m.algebra, m, top, args.jobs, args.verbose)).structure
    else:
        X = cyclic_bar_construction(_algebra(defs, name), top, args.jobs, args.verbose)
    X = replace(X, operators=X.operators.with_inverse())
    matrix = evaluate(w, X)
    form = normalize(w)
    report = Report(_echo("word", "eval", path, text, pair and f"--pair={pair}", name))
    report.value("normal form", str(form))
    report.verdict("normal_form_agrees", el.equal(matrix, evaluate(form.word(), X)))
    report.witness("value", matrix, defs.field)
    return report


@engine_command(word_group, "sample")
@FILE
@click.option("--count", type=int, default=50)
@click.option("--length", type=int, default=12, help="Longest word drawn.")
@click.option("--tag", type=click.Choice(TAGS), default="lambda")
@click.option("--algebra", "name", default=None)
def word_sample(args, path, count, length, tag, name):
    """Seeded random words checked against their normal forms on the cyclic bar construction."""
    defs = _load(path, args)
    rng = np.random.default_rng(args.seed)
    X = cyclic_bar_construction(_algebra(defs, name), args.max_degree, args.jobs, args.verbose)
    operators = X.operators.with_inverse()
    disagreements = []
    for _ in range(count):
        w = random_word(rng, args.max_degree, int(rng.integers(0, length + 1)), tag)
        if not el.equal(evaluate(normalize(w).word(), operators), evaluate(w, operators)):
            disagreements.append(str(w))
    report = Report(
        _echo(
            "word",
            "sample",
            path,
            name,
            f"--seed={args.seed}",
            f"--count={count}",
            f"--tag={tag}",
        )
    )
    report.value("words", count).value("disagreements", len(disagreements))
    report.verdict("normal_forms_agree", not disagreements)
    for w in disagreements:
        report.note(f"normal form disagrees: {w}")
    return report


@engine_command(cli, "vanishing")
@FILE
@click.argument("name")
def vanishing(args, path, name):
    """Each T_n(H, M) of a Hopf module M is injective, hence stably zero."""
    defs = _load(path, args)
    check = hopf_module_vanishing_check(defs.get(name, "module"), args.max_degree)
    report = Report(_echo("vanishing", path, name)).verdict("applicable", check.applicable)
    if not check.applicable:
        report.note(check.reason)
        return report
    table = TableLogger("T_n(H, M)")
    for n, injective in check.injective.items():
        table.log({"degree": n, "injective": injective, "dim stable End": check.stable_quotient[n]})
    report.table("degrees", table)
    report.verdict("vanishes", check.holds)
    return report


def _describe(defs: Definitions, name: str) -> Dict[str, str]:
    obj, kind = defs.objects[name], defs.kinds[name]
    if isinstance(obj, NamedMap):
        return {"dim": f"{obj.matrix.shape[1]} -> {obj.matrix.shape[0]}", "over": f"{obj.source} -> {obj.target}"}
    if isinstance(obj, HopfAlgebra):
        return {"dim": str(obj.dim), "over": ""}
    if isinstance(obj, (AModObject, StableModComod)):
        return {"dim": str(obj.dim), "over": f"{obj.algebra.name} on {obj.comodule.name}"}
    comodule = defs.comodule_of(name)
    return {"dim": str(comodule.dim), "over": comodule.hopf.name}


@cli.command("show")
@FILE
@click.option("--field", "field_", default=None)
def show(path, field_):
    """
    List the objects of a definition file.
    """
    ctx = click.get_current_context()
    try:
        defs = load(library.resolve(path), field_)
    except (DefinitionError, ValueError, OSError) as error:
        click.echo(f"error: {error}", err=True)
        ctx.exit(2)
    table = Table(title=f"{os.path.basename(path)} ({defs.field!r})")
    table.add_column("#", justify="right", style="cyan", no_wrap=True)
    table.add_column("Name", justify="left", style="magenta", no_wrap=True)
    table.add_column("Kind", justify="left", style="green", no_wrap=True)
    table.add_column("Dim", justify="right", no_wrap=True)
    table.add_column("Over", justify="left", no_wrap=False)
    for i, name in enumerate(defs.names()):
        info = _describe(defs, name)
        table.add_row(str(i + 1), name, defs.kinds[name], info["dim"], info["over"])

    console = Console()
    console.print(table)


@cli.command("examples")
def examples():
    """List the bundled definition files."""
    for name in library.bundled_names():
        click.echo(name)


if __name__ == "__main__":
    cli()
