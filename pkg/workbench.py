import os
import sys
import json
import time
import argparse

from utils import dict2string, mkdir, open_log, log_line, second2hours, dump_json
from combinatorics.budget import GrowthBudget
from combinatorics.blocks import BlockSystem
from combinatorics.coloring import Coloring, Ground
from combinatorics.errors import (BudgetExceeded, InconsistentModel, InvalidInputWitness, InvalidWitness,
                                  PipelineStageFailure, RejectedResult, WorkbenchError)
from hierarchy.grzegorczyk import eval_E, parse_E_call
from hierarchy.tower import tower_build, tower_compare, to_text
from reductions.blocks_embed import embed_lift_line
from reductions.grid_flatten import grid_lift_witness
from reductions.pipeline import OPLUS_ROUTES, PipelineOptions, find_monochromatic_line_main
from reductions.singleton import singleton_blocks
from reductions.trace import ReductionTrace
from results.chain import MODES, verify_chain
from results.db import DEFAULT_DB, db_check, db_get, db_list, db_record, load_db
from search.certificate import Certificate
from search.cnf import DEFAULT_CLAUSE_LIMIT, decode_cnf_model, export_cnf, read_model
from search.engine import SearchOptions, exists_bad_coloring
from search.number import compute_number
from witnesses.kinds import F13Witness, Kind, SubspaceWitness, parse_kind_spec, witness_from_json
from witnesses.verify import refute, verify_witness

EXIT_OK, EXIT_ERROR, EXIT_VERIFY, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3, 64
VERIFY_ERRORS = (InvalidWitness, InconsistentModel, RejectedResult, PipelineStageFailure, InvalidInputWitness)
DEFAULT_OUTDIR = os.environ.get('HJWB_OUTDIR', './runs/')


class WorkbenchParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '{}: error: {}\n'.format(self.prog, message))


def add_common(parser):
    parser.add_argument('--outdir', nargs='?', type=str, default=DEFAULT_OUTDIR,
                        help='Directory for certificates, traces and log.txt')
    parser.add_argument('--quiet', action='store_true', help='No progress bars')
    parser.set_defaults(quiet=False)


def add_kind(parser):
    parser.add_argument('--kind', nargs='?', type=str, default='hj',
                        help='One of ' + ', '.join(k.value for k in Kind))
    parser.add_argument('--m', nargs='?', type=int, default=1, help='Dimension / progression length')
    parser.add_argument('--alphabet', nargs='?', type=int, default=2, help='Alphabet size |Lambda| (grid dimension for gw)')
    parser.add_argument('--colors', nargs='?', type=int, default=2, help='Number of colours |C|')
    parser.add_argument('--n', nargs='?', type=int, default=None, help='Block size for f9sn')
    parser.add_argument('--strict-omega', dest='strict_omega', action='store_true',
                        help='Omega excludes compositions with a part equal to m* (oplus only)')


def add_search(parser):
    parser.add_argument('--budget', nargs='?', type=float, default=None, help='Wall-clock budget in seconds')
    parser.add_argument('--max-nodes', dest='max_nodes', nargs='?', type=int, default=None, help='Node budget')
    parser.add_argument('--threads', nargs='?', type=int, default=1, help='Worker threads')
    parser.add_argument('--seed', nargs='?', type=int, default=0, help='Colour order seed, 0 for natural order')
    parser.add_argument('--no-symmetry', dest='no_symmetry', action='store_true', help='Disable lex-leader pruning')
    parser.add_argument('--coord-symmetry', dest='coord_symmetry', action='store_true',
                        help='Also break coordinate permutations of the cube')
    parser.add_argument('--no-divisibility', dest='no_divisibility', action='store_true',
                        help='Allow sizes not divisible by |Lambda| for the f-family')


def add_coloring(parser):
    parser.add_argument('--certificate', nargs='?', type=str, default=None, help='Certificate file holding a colouring')
    parser.add_argument('--ground', nargs='?', type=str, default=None, help='Ground set header, e.g. cube:k=2,h=2')
    parser.add_argument('--data', nargs='?', type=str, default=None, help='Colouring as a base-c digit string')


def get_args(argv=None):
    parser = WorkbenchParser(description='Hales-Jewett workbench')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('compute', help='Exact value of a partition number by a size scan')
    add_common(p)
    add_kind(p)
    add_search(p)
    p.add_argument('--max-k', dest='max_k', nargs='?', type=int, default=8, help='Largest size to try')
    p.add_argument('--db', nargs='?', type=str, default=DEFAULT_DB, help='Results database')

    p = sub.add_parser('find-bad', help='Bad colouring at one size')
    add_common(p)
    add_kind(p)
    add_search(p)
    p.add_argument('--k', nargs='?', type=int, default=1, help='Size of the ground set')

    p = sub.add_parser('check-witness', help='Verify a witness, or re-refute a bad certificate')
    add_common(p)
    add_kind(p)
    add_coloring(p)
    p.add_argument('--witness', nargs='?', type=str, default=None, help='Witness JSON (file or inline)')
    p.add_argument('--refute', action='store_true', help='Re-verify that the colouring admits no witness')

    p = sub.add_parser('reduce', help='Apply one lemma reduction to a witness')
    add_common(p)
    add_coloring(p)
    p.add_argument('--reduction', nargs='?', type=str, default='grid-lift',
                   choices=['grid-lift', 'singleton', 'embed-lift'], help='Which reduction')
    p.add_argument('--witness', nargs='?', type=str, default=None, help='Input witness JSON (file or inline)')
    p.add_argument('--system', nargs='?', type=str, default=None, help='f8* block system JSON for embed-lift')
    p.add_argument('--n', nargs='?', type=int, default=1, help='Side n of the composite-letter cube')
    p.add_argument('--m', nargs='?', type=int, default=1, help='Letters per composite letter')

    p = sub.add_parser('pipeline', help='Monochromatic line from an f8* block system')
    add_common(p)
    add_coloring(p)
    p.add_argument('--system', nargs='?', type=str, default=None, help='f8* block system JSON (file or inline)')
    p.add_argument('--route', nargs='?', type=str, default='gallai-witt', choices=OPLUS_ROUTES,
                   help='How property (+) is solved')

    p = sub.add_parser('export-cnf', help='DIMACS instance whose models are bad colourings')
    add_common(p)
    add_kind(p)
    p.add_argument('--k', nargs='?', type=int, default=1, help='Size of the ground set')
    p.add_argument('--out', nargs='?', type=str, default=None, help='Output .cnf path')
    p.add_argument('--clause-limit', dest='clause_limit', nargs='?', type=int, default=DEFAULT_CLAUSE_LIMIT)
    p.add_argument('--no-divisibility', dest='no_divisibility', action='store_true')

    p = sub.add_parser('decode-model', help='Turn a solver model into a bad certificate')
    add_common(p)
    add_kind(p)
    p.add_argument('--k', nargs='?', type=int, default=1, help='Size of the ground set')
    p.add_argument('--model', nargs='?', type=str, default=None, help='Solver output file')
    p.add_argument('--no-divisibility', dest='no_divisibility', action='store_true')

    p = sub.add_parser('bounds', help='Grzegorczyk values and tower comparisons')
    add_common(p)
    p.add_argument('--compare', nargs=2, type=str, default=None, metavar=('A', 'B'))
    p.add_argument('--eval', nargs='?', type=str, default=None, help='E-call such as E:2,3')
    p.add_argument('--show', nargs='?', type=str, default=None, help='Print the text form of a tower')
    p.add_argument('--max-bits', dest='max_bits', nargs='?', type=int, default=4096)
    p.add_argument('--max-steps', dest='max_steps', nargs='?', type=int, default=1000000)

    p = sub.add_parser('verify-chain', help='Audit the inequality chain over the results database')
    add_common(p)
    p.add_argument('--db', nargs='?', type=str, default=DEFAULT_DB, help='Results database')
    p.add_argument('--mode', nargs='?', type=str, default='strict', choices=MODES)
    p.add_argument('--fail-on-violation', dest='fail_on_violation', action='store_true')

    p = sub.add_parser('db', help='Inspect the results database')
    add_common(p)
    add_kind(p)
    p.add_argument('action', nargs='?', type=str, default='list', choices=['list', 'get', 'check'])
    p.add_argument('--db', nargs='?', type=str, default=DEFAULT_DB, help='Results database')
    p.add_argument('--rerun', action='store_true', help='Also re-run exhaustion records on check')
    p.add_argument('--no-divisibility', dest='no_divisibility', action='store_true',
                   help='Read the all-sizes result of an f-family kind')

    return parser.parse_args(argv)


def kind_spec(args):
    return parse_kind_spec(args.kind, args.alphabet, args.colors, args.m, args.n, args.strict_omega)


def load_json_arg(value):
    if value is None:
        raise WorkbenchError('missing JSON argument')
    if os.path.exists(value):
        with open(value) as f:
            return json.load(f)
    return json.loads(value)


def load_coloring(args, colors=None):
    if args.certificate:
        cert = Certificate.load(args.certificate)
        if cert.coloring is None:
            raise RejectedResult('certificate {} holds no colouring'.format(args.certificate))
        return cert.coloring, cert
    if args.ground is None or args.data is None:
        raise WorkbenchError('give --certificate or both --ground and --data')
    colors = colors or getattr(args, 'colors', None) or max(2, 1 + max(int(x, 36) for x in args.data))
    return Coloring.from_digits(Ground.parse(args.ground), args.data, colors), None


def ground_size(g: Ground) -> int:
    return {'cube': g.k, 'interval': g.n, 'grid': g.n, 'omega': g.m_star}[g.kind]


def tower_name(source: str) -> str:
    if source.startswith('gowers:'):
        return 'gowers({})'.format(source.split(':', 1)[1])
    if source[:2].upper() == 'E:':
        n, call = parse_E_call(source)
        return 'E{}({})'.format(n, ','.join(str(a) for a in call))
    return source


def cmd_compute(args, log):
    spec = kind_spec(args)
    options = SearchOptions.from_args(args)
    start = time.time()
    result = compute_number(spec, args.max_k, options)
    db = load_db(args.db)
    db_record(db, spec, result)
    log_line(log, result.summary(), args.quiet)
    log_line(log, dict2string({'elapsed': second2hours(time.time() - start), 'db': args.db}), True)
    return EXIT_OK if result.exact else EXIT_BUDGET


def cmd_find_bad(args, log):
    spec = kind_spec(args)
    options = SearchOptions.from_args(args)
    verdict = exists_bad_coloring(spec, args.k, options)
    cert = Certificate.from_verdict(spec, args.k, verdict, options.divisibility)
    path = cert.save(os.path.join(args.outdir, cert.file_name()))
    detail = cert.coloring.to_digits() if cert.is_bad else ''
    log_line(log, '{} k={}: {} {}'.format(spec.label, args.k, verdict.verdict, detail).rstrip(), args.quiet)
    log_line(log, dict2string(dict(verdict.stats.to_json(), certificate=path)), True)
    return EXIT_BUDGET if verdict.verdict == 'budget-exceeded' else EXIT_OK


def cmd_check_witness(args, log):
    d, cert = load_coloring(args)
    if cert is not None:
        spec, size = cert.spec, cert.size
    else:
        spec, size = kind_spec(args), ground_size(d.ground)
    if args.refute:
        w = refute(spec, size, d)
        if w is not None:
            raise RejectedResult('{} at size {} admits {}'.format(spec.label, size, w.to_json()))
        log_line(log, '{} k={}: no witness, colouring is bad'.format(spec.label, size), args.quiet)
        return EXIT_OK
    w = witness_from_json(load_json_arg(args.witness))
    if not verify_witness(spec, size, d, w):
        raise InvalidWitness('{} is not a witness for {} at size {}'.format(w.to_json(), spec.label, size))
    log_line(log, '{} k={}: witness verifies'.format(spec.label, size), args.quiet)
    return EXIT_OK


def cmd_reduce(args, log):
    d, _ = load_coloring(args)
    h = d.ground.h
    trace = ReductionTrace(args.reduction)
    w = witness_from_json(load_json_arg(args.witness))
    expected = F13Witness if args.reduction == 'singleton' else SubspaceWitness
    if not isinstance(w, expected):
        raise InvalidInputWitness('{} expects a {} witness'.format(args.reduction, expected.__name__))
    if args.reduction == 'grid-lift':
        out = grid_lift_witness(w.system, d, args.n, args.m, h, trace)
    elif args.reduction == 'singleton':
        out = singleton_blocks(w, d, h, trace)
    else:
        S = BlockSystem.from_json(load_json_arg(args.system))
        out = embed_lift_line(w.system, S, d, h, trace)
    path = dump_json(os.path.join(args.outdir, '{}_trace.json'.format(args.reduction)), trace.to_json())
    log_line(log, '{}: {}'.format(args.reduction, json.dumps(out.to_json())), args.quiet)
    log_line(log, 'trace ' + path, True)
    return EXIT_OK


def cmd_pipeline(args, log):
    d, _ = load_coloring(args)
    S = BlockSystem.from_json(load_json_arg(args.system))
    trace = ReductionTrace('monochromatic-line')
    try:
        line = find_monochromatic_line_main(d, S, PipelineOptions(args.route), trace)
    finally:
        dump_json(os.path.join(args.outdir, 'pipeline_trace.json'), trace.to_json())
    log_line(log, 'line: {}'.format(json.dumps(line.to_json())), args.quiet)
    return EXIT_OK


def cmd_export_cnf(args, log):
    spec = kind_spec(args)
    path = args.out or os.path.join(args.outdir, '{}_k{}.cnf'.format(spec.kind.value, args.k))
    mkdir(os.path.dirname(path))
    text = export_cnf(spec, args.k, path, args.clause_limit, not args.no_divisibility)
    header = next(line for line in text.splitlines() if line.startswith('p cnf'))
    log_line(log, '{} k={}: {} -> {}'.format(spec.label, args.k, header, path), args.quiet)
    return EXIT_OK


def cmd_decode_model(args, log):
    spec = kind_spec(args)
    with open(args.model) as f:
        model = read_model(f.read())
    cert = decode_cnf_model(spec, args.k, model, not args.no_divisibility)
    path = cert.save(os.path.join(args.outdir, cert.file_name()))
    log_line(log, '{} k={}: bad {} -> {}'.format(spec.label, args.k, cert.coloring.to_digits(), path), args.quiet)
    return EXIT_OK


def cmd_bounds(args, log):
    budget = GrowthBudget(args.max_bits, args.max_steps)
    if args.eval:
        n, call = parse_E_call(args.eval)
        log_line(log, '{}={}'.format(tower_name(args.eval), eval_E(n, call, budget)), args.quiet)
    if args.show:
        log_line(log, '{} = {}'.format(tower_name(args.show), to_text(tower_build(args.show, budget))), args.quiet)
    if args.compare:
        a, b = args.compare
        order = tower_compare(tower_build(a, budget), tower_build(b, budget))
        log_line(log, '{} {} {}'.format(tower_name(a), order, tower_name(b)), args.quiet)
    return EXIT_OK


def cmd_verify_chain(args, log):
    db = load_db(args.db)
    report = verify_chain(db, args.mode, progress=not args.quiet)
    path = report.save(os.path.join(args.outdir, 'chain_{}.json'.format(args.mode)))
    for entry in report.entries:
        if entry.status == 'violated':
            log_line(log, 'violated {}: {} {} vs {} {}'.format(entry.ident, entry.left, entry.left_bound,
                                                               entry.right, entry.right_bound), args.quiet)
    log_line(log, '{} -> {}'.format(report.summary(), path), args.quiet)
    if args.fail_on_violation and not report.ok:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_db(args, log):
    db = load_db(args.db)
    if args.action == 'list':
        for line in db_list(db):
            log_line(log, line, args.quiet)
        return EXIT_OK
    if args.action == 'get':
        spec = kind_spec(args)
        divisibility = not args.no_divisibility
        result = db_get(db, spec, divisibility)
        missing = '{}: not recorded'.format(spec.result_key(divisibility))
        log_line(log, result.summary() if result is not None else missing, args.quiet)
        return EXIT_OK
    problems = db_check(db, args.rerun)
    for problem in problems:
        log_line(log, problem, args.quiet)
    log_line(log, '{} entries, {} problems'.format(len(db.keys()), len(problems)), args.quiet)
    return EXIT_VERIFY if problems else EXIT_OK


COMMANDS = {
    'compute': cmd_compute, 'find-bad': cmd_find_bad, 'check-witness': cmd_check_witness,
    'reduce': cmd_reduce, 'pipeline': cmd_pipeline, 'export-cnf': cmd_export_cnf,
    'decode-model': cmd_decode_model, 'bounds': cmd_bounds, 'verify-chain': cmd_verify_chain, 'db': cmd_db,
}


def main(argv=None):
    args = get_args(argv)
    log = open_log(args.outdir, args.command)
    try:
        return COMMANDS[args.command](args, log)
    except BudgetExceeded as err:
        log_line(log, 'budget exceeded: {}'.format(err))
        return EXIT_BUDGET
    except VERIFY_ERRORS as err:
        log_line(log, 'verification failed: {}'.format(err))
        return EXIT_VERIFY
    except WorkbenchError as err:
        log_line(log, 'error: {}'.format(err))
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
