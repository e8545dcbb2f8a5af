"""Command bodies, one per subcommand, each returning a dump dict."""
import logging
from typing import Optional

from lccc.adjunction import CheckCfg, check_chain, slice_exp_as_composite, summarize
from lccc.constants import DEFAULT_LIMIT, DEFAULT_SEED
from lccc.depprod import dependent_product_fiberwise, dependent_sum, product_oracle_iso
from lccc.diagram import Diagram, load_diagram, read_text
from lccc.dtt import evaluate, parse
from lccc.errors import EnumerationTooLarge
from lccc.exponentials import exp
from lccc.finset import is_bijection
from lccc.limits import Cospan, base_change, pullback
from lccc.report import map_entry, slice_entry, truncate


def _header(command: str, diagram: Diagram, args: dict, limit: int, seed: int) -> dict:
    return {
        'command': command,
        'args': args,
        'inputs': {
            'file': diagram.source,
            'sets': {name: len(X) for name, X in diagram.sets.items()},
            'maps': {
                name: f'{f.dom.name}→{f.cod.name}' for name, f in diagram.maps.items()
            },
        },
        'seed': seed,
        'limit': limit,
    }


def cmd_pullback(
    path: str, f: str, g: str, limit: int = DEFAULT_LIMIT, seed: int = DEFAULT_SEED
) -> dict:
    diagram = load_diagram(path)
    cospan = Cospan(diagram.get_map(f), diagram.get_map(g))
    pb = pullback(cospan)
    breakdown = pb.fiber_breakdown()
    dump = _header('pullback', diagram, {'f': f, 'g': g}, limit, seed)
    dump['result'] = {
        'carrier': pb.carrier.name,
        'cardinality': len(pb.carrier),
        'elements': truncate(pb.carrier.elements),
        'p': map_entry(pb.p),
        'q': map_entry(pb.q),
        'fibers': [
            {'over': a, 'f_fiber': nf, 'g_fiber': ng, 'pullback_fiber': n}
            for a, nf, ng, n in breakdown
        ],
        'fibered_product_sum': sum(nf * ng for _, nf, ng, _ in breakdown),
    }
    if is_bijection(pb.p):
        dump['result']['note'] = (
            f'p is a bijection, so the carrier is isomorphic to {cospan.f.dom.name}'
        )
    return dump


def cmd_sigma(
    path: str, f: str, p: str, limit: int = DEFAULT_LIMIT, seed: int = DEFAULT_SEED
) -> dict:
    diagram = load_diagram(path)
    obj = dependent_sum(diagram.get_map(f))(diagram.family(p))
    dump = _header('sigma', diagram, {'f': f, 'p': p}, limit, seed)
    dump['result'] = slice_entry(obj)
    return dump


def cmd_pi(
    path: str, f: str, p: str, limit: int = DEFAULT_LIMIT, seed: int = DEFAULT_SEED
) -> dict:
    diagram = load_diagram(path)
    fm, family = diagram.get_map(f), diagram.family(p)
    obj = dependent_product_fiberwise(fm, family, limit)
    dump = _header('pi', diagram, {'f': f, 'p': p}, limit, seed)
    dump['result'] = slice_entry(obj)
    try:
        agrees = product_oracle_iso(fm, family, limit).round_trips()
    except EnumerationTooLarge as e:
        logging.info(f'Skipping the pullback construction of Π: {e}')
        agrees = 'skipped: over the enumeration limit'
    dump['result']['agrees_with_pullback_construction'] = agrees
    return dump


def cmd_pull(
    path: str, f: str, p: str, limit: int = DEFAULT_LIMIT, seed: int = DEFAULT_SEED
) -> dict:
    diagram = load_diagram(path)
    obj = base_change(diagram.get_map(f))(diagram.family(p))
    dump = _header('pull', diagram, {'f': f, 'p': p}, limit, seed)
    dump['result'] = slice_entry(obj)
    return dump


def cmd_exp(
    path: str,
    X: str,
    Y: str,
    limit: int = DEFAULT_LIMIT,
    seed: int = DEFAULT_SEED,
    ev: bool = False,
) -> dict:
    diagram = load_diagram(path)
    E = exp(diagram.get_set(X), diagram.get_set(Y), limit)
    dump = _header('exp', diagram, {'X': X, 'Y': Y, 'ev': ev}, limit, seed)
    dump['result'] = {
        'carrier': E.carrier.name,
        'cardinality': len(E.carrier),
        'elements': truncate(E.carrier.elements),
    }
    if ev:
        dump['result']['ev'] = map_entry(E.ev)
    return dump


def cmd_adjoint_check(
    path: str,
    f: str,
    limit: int = DEFAULT_LIMIT,
    seed: int = DEFAULT_SEED,
    slice_exp: bool = False,
    max_total: int = 2,
    workers: int = 1,
    verbose: bool = False,
) -> dict:
    diagram = load_diagram(path)
    fm = diagram.get_map(f)
    cfg = CheckCfg(limit=limit, seed=seed, workers=workers, verbose=verbose)
    if diagram.inject:
        logging.warning(f'{path} injects {diagram.inject!r}; expect the check to fail')
    reports = [check_chain(fm, cfg, max_total=max_total, inject=diagram.inject)]
    if slice_exp:
        reports.append(slice_exp_as_composite(fm, cfg, max_total=max_total))
    dump = _header(
        'adjoint-check',
        diagram,
        {
            'f': f,
            'slice_exp': slice_exp,
            'max_total': max_total,
            'inject': diagram.inject,
        },
        limit,
        seed,
    )
    dump['laws'] = [r.to_dict() for r in reports]
    dump['summary'] = summarize(reports)
    dump['passed'] = dump['summary']['passed']
    return dump


def cmd_eval(path: str, limit: int = DEFAULT_LIMIT, seed: int = DEFAULT_SEED) -> dict:
    prog = parse(read_text(path))
    result = evaluate(prog, limit)
    listing = result.to_dict()
    for fiber in listing['fibers']:
        fiber['elements'] = truncate(fiber['elements'])
    return {
        'command': 'eval',
        'args': {},
        'inputs': {'file': path, 'declarations': len(prog.declarations)},
        'seed': seed,
        'limit': limit,
        'result': listing,
    }


def describe_failures(dump: dict, limit: Optional[int] = None) -> list[str]:
    """One line per recorded law failure, in report order."""
    lines = []
    for law in dump.get('laws', []):
        for failure in law['failures'][:limit]:
            lines.append(
                f'{law["name"]}: {failure["law"]} at {failure["instance"]}: '
                f'{failure["witness"]}'
            )
    return lines
