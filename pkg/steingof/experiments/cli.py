#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The SteinGof Team.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

import argparse
import json
import logging
import pathlib
import sys

from typing import List, Optional

from .config import ExperimentConfig
from .sweep import ExperimentSweep, run_test
from ..errors import ConfigurationError, SteinGofError
from ..gof import fit_generator_scores
from ..stein import convergence_probe

logger = logging.getLogger(__name__)


def _out_dir(args: argparse.Namespace) -> pathlib.Path:
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def test_command(args: argparse.Namespace, config: ExperimentConfig) -> None:
    report = run_test(config, logger=logger)
    print(json.dumps(report.as_dict(), indent=4))
    path = config.output_path(_out_dir(args), 'report')
    report.write_json(path)
    logger.info(f"wrote {path}.")


def sweep_command(args: argparse.Namespace, config: ExperimentConfig) -> None:
    sweep = ExperimentSweep(config, logger)
    results = sweep.run()
    print(results.to_csv(index=False), end='')
    sweep.write(results, _out_dir(args))


def fit_score_command(args: argparse.Namespace, config: ExperimentConfig) -> None:
    model = fit_generator_scores(config.build_generator(), config.test, logger)
    document = json.dumps(model.as_dict(), indent=4)
    print(document)
    path = config.output_path(_out_dir(args), 'score')
    path.write_text(document)
    logger.info(f"wrote {path}.")


def probe_command(args: argparse.Namespace, config: ExperimentConfig) -> None:
    if not config.probe:
        raise ConfigurationError("probe: the experiment has no probe section.")
    probe = config.probe
    target = config.build_generator()
    table = convergence_probe(target.dimension,
                              probe.get('n', config.test.n),
                              probe['Ns'], probe['Bs'],
                              probe.get('seeds', [config.seed]),
                              target=target,
                              exact_score=probe.get('exact_score', False),
                              deterministic_uniform=probe.get('deterministic_uniform', False),
                              summary=config.test.summary,
                              basis=config.test.basis,
                              ridge=config.test.ridge,
                              cfg=config.test.kernel,
                              form=config.test.form,
                              logger=logger)
    print(table.to_csv(index=False), end='')
    path = config.output_path(_out_dir(args), 'probe')
    table.to_csv(path, index=False)
    logger.info(f"wrote {path}.")


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='steingof',
                                     description="Goodness-of-fit tests for implicit generative models.")
    subparsers = parser.add_subparsers()

    def add_common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("-c", "--config", required=True, type=pathlib.Path, help="experiment configuration (JSON)")
        sub.add_argument("-o", "--out", default=".", type=pathlib.Path, help="output directory")
        sub.add_argument("-s", "--seed", type=int, default=None, help="base seed (overrides the configuration)")
        sub.add_argument("-t", "--threads", type=int, default=None, help="number of worker processes")
        sub.add_argument("-v", "--verbose", action="store_true", help="if set, print debug logs")

    test_parser = subparsers.add_parser("test", help="run one goodness-of-fit test")
    test_parser.set_defaults(action=test_command)
    add_common(test_parser)

    sweep_parser = subparsers.add_parser("sweep", help="run a rejection-rate sweep")
    sweep_parser.set_defaults(action=sweep_command)
    add_common(sweep_parser)

    fit_parser = subparsers.add_parser("fit-score", help="fit and dump the conditional score model")
    fit_parser.set_defaults(action=fit_score_command)
    add_common(fit_parser)

    probe_parser = subparsers.add_parser("probe-convergence", help="tabulate the statistic convergence gap")
    probe_parser.set_defaults(action=probe_command)
    add_common(probe_parser)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = get_parser()
    args = parser.parse_args(argv)

    if not hasattr(args, "action"):
        parser.print_help()
        return 2

    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if args.verbose else logging.INFO,
                        format="[%(asctime)s] %(levelname)s %(name)s: %(message)s")
    try:
        config = ExperimentConfig.load(args.config, seed=args.seed, threads=args.threads, logger=logger)
        args.action(args, config)
    except (SteinGofError, OSError) as e:
        logger.error(str(e))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
