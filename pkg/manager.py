#!/usr/bin/env python
# encoding: utf-8

"""
Command line front end

>>> python manager.py isoparametric --m1 6 --m2 9
>>> python manager.py group --kind su --n 20 --format json
>>> python manager.py --help

Exit codes: 0 certified (or nothing to certify), 2 positive witness found,
3 inconclusive or upper bound only, 1 usage error.
"""

import argparse
import logging
import sys

import acscert
import config
from acscert import api
from acscert.api.report import FORMATS
from acscert.errors import AcsError

USAGE_ERROR = 1
NOT_CERTIFIED = 3


class UsageError(AcsError):

    """ Bad command line """


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('expected a positive integer, got {}'.format(text))
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('expected a nonnegative integer, got {}'.format(text))
    return value


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=None, help='Report format, REPORT.FORMAT if omitted')

    sampling = _Parser(add_help=False)
    sampling.add_argument('--samples', type=_positive, default=None, help='Size of the sampling sweep')
    sampling.add_argument('--seed', type=_nonnegative, default=None, help='Seed of the sampling sweep')
    sampling.add_argument('--sampling-only', action='store_true', help='Report the sweep alone, no closed forms')

    parser = _Parser(prog='manager.py', description='Verify the sign of ACS for example families and report index-bound constants')
    parser.add_argument('--config', choices=sorted(config.config), default=None, help='Configuration to activate (development, testing, production)')
    commands = parser.add_subparsers(dest='command', metavar='command', parser_class=_Parser)
    commands.required = True

    iso = commands.add_parser('isoparametric', parents=[common], help='Minimal isoparametric hypersurface or its focal manifold')
    iso.add_argument('--m1', type=_positive, required=True)
    iso.add_argument('--m2', type=_positive, required=True)
    iso.add_argument('--focal', action='store_true', help='Bound ACS on the focal manifold M+')
    iso.add_argument('--oracle', action='store_true', help='Cross-check the simplex programs on a grid')
    iso.add_argument('--grid-step', type=float, default=None, help='Grid spacing of the oracle')

    grp = commands.add_parser('group', parents=[common, sampling], help='SU(n) or Sp(n) in its matrix space')
    grp.add_argument('--kind', choices=sorted(api.controller.GROUP_KINDS), required=True)
    grp.add_argument('--n', type=_positive, required=True)

    gr = commands.add_parser('grassmannian', parents=[common, sampling], help='Quaternionic Grassmannian Gr_d(H^n)')
    gr.add_argument('--d', type=_positive, required=True)
    gr.add_argument('--n', type=_positive, required=True)
    gr.add_argument('--strict', action='store_true', help='Enforce the full quaternionic orthogonality of sampled pairs')

    cat = commands.add_parser('catalog', parents=[common], help='Every configured catalog family, or one of them')
    cat.add_argument('--family', default=None, help='Family tag, e.g. FKM(k=2,m=3)/focal-M+')

    cl = commands.add_parser('clifford', parents=[common], help='Clifford system and the focal manifold of its FKM family')
    cl.add_argument('--m', type=_positive, required=True)
    cl.add_argument('--k', type=_positive, required=True)

    const = commands.add_parser('constants', parents=[common], help='Index-bound constants of an ambient dimension')
    const.add_argument('--dim', type=_positive, required=True)

    return parser


def _dispatch(args):
    if args.command == 'isoparametric':
        if args.grid_step is not None and not args.oracle:
            raise UsageError('--grid-step needs --oracle')
        return [api.isoparametric(args.m1, args.m2, args.focal, args.oracle, args.grid_step)]
    if args.command == 'group':
        return [api.group(args.kind, args.n, args.samples, args.seed, args.sampling_only)]
    if args.command == 'grassmannian':
        return [api.grassmannian(args.d, args.n, args.samples, args.seed, args.sampling_only, args.strict)]
    if args.command == 'catalog':
        return api.catalog(args.family)
    if args.command == 'clifford':
        return [api.clifford(args.m, args.k)]
    return [api.constants(args.dim)]


def run(argv):
    """ Runs one subcommand.

    :param argv: Command line without the program name
    :return: (certificates, exit code, format); certificates is None on usage errors
    """
    try:
        args = build_parser().parse_args(argv)
        cfg = acscert.create_app(args.config)
        fmt = args.format or cfg.APP_REPORT_FORMAT
        certificates = _dispatch(args)
    except AcsError as e:
        sys.stderr.write('error: {}\n'.format(e))
        return None, USAGE_ERROR, None

    if len(certificates) == 1 and args.command != 'catalog':
        code = certificates[0].exit_code
    else:
        code = 0 if all(c.certified for c in certificates) else NOT_CERTIFIED
    return certificates, code, fmt


def main(argv=None, stream=None):
    certificates, code, fmt = run(sys.argv[1:] if argv is None else argv)
    for cert in certificates or []:
        api.emit(cert, fmt, stream)
    return code


if __name__ == '__main__':
    sys.exit(main())
