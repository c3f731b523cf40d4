"""Subcommands of the spinbrauer CLI and their exit-code contract."""

import functools
import json
import logging
import os
from argparse import Namespace
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional

from src.core.runner import SuiteRunner
from src.diagram import (
    CompositionError,
    Diagram,
    DslSyntaxError,
    falling_factorial,
    monkey1,
    monkey1_value,
    monkey2,
    parse_dsl,
)
from src.evaluator import NotClosed, PoppingEvaluator
from src.exactnum import CycloScalar, EvaluationPole, ParamScalar
from src.incarnation import (
    CheckJob,
    IncarnationParams,
    VerificationEntry,
    VerificationReport,
    affine_jobs,
    enmore_report,
    incarnate,
    relation_jobs,
)
from src.plugins import PluginRegistry
from src.preset import PresetHandler, RunConfig, build_run_config
from src.repthy import (
    barbell_algebra_dim,
    barbell_square_spectrum,
    central_elements,
    commutant_dim,
    commutant_dim_direct,
    isotypic_spectrum,
    projector_checks,
)
from src.symfunc import (
    BASES,
    convert,
    generation_solver,
    pairing_check,
    schur_positivity_scan,
    tanh_check,
    w_r,
)
from src.utils.colors import Colors
from src.utils.constants import (
    DEFAULT_RUN_PRESET,
    DIAGRAM_FILE_SUFFIX,
    DIRECT_COMMUTANT_MAX_DIMENSION,
    ENV_CONFIG,
    EXIT_ASSERTION,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
)
from src.utils.errors import InvalidArgument, ShapeError, TooLarge, UnsupportedBox

ANALYSES = ("commutant", "barbell", "spectrum", "projectors", "central", "stand")
SYMFUNC_TABLES = ("w", "pairing", "positivity", "generate")

# Failures that mean the request itself was wrong or too big to honour.
USAGE_ERRORS = (
    InvalidArgument,
    DslSyntaxError,
    NotClosed,
    ShapeError,
    CompositionError,
    UnsupportedBox,
    EvaluationPole,
    TooLarge,
    FileNotFoundError,
)

logger = logging.getLogger(__name__)


def load_preset(args: Namespace) -> PresetHandler:
    """The preset named by --config, then $SPINBRAUER_CONFIG, then the default file."""
    path = getattr(args, "config", None) or os.environ.get(ENV_CONFIG) or DEFAULT_RUN_PRESET
    return PresetHandler(Path(path))


def write_json(payload: Any, out: Optional[Path]) -> None:
    """Write the payload to out, or print it when no output file is set."""
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out is None:
        print(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text + "\n", encoding="utf-8")
    print(f"{Colors.DIM}Report written to {out}{Colors.RESET}")


def exit_codes(command: Callable[[Namespace], int]) -> Callable[[Namespace], int]:
    """Turn usage and size errors raised by a command into exit code 2."""

    @functools.wraps(command)
    def wrapper(args: Namespace) -> int:
        try:
            return command(args)
        except USAGE_ERRORS as e:
            logger.debug(f"{command.__name__} rejected its input: {e}", exc_info=True)
            print(Colors.error(f"{type(e).__name__}: {e}"))
            return EXIT_USAGE

    return wrapper


class Core:
    """Runs one subcommand for a fully merged RunConfig."""

    def __init__(self, config: RunConfig) -> None:
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.config: RunConfig = config

    def _params(self) -> Iterator[IncarnationParams]:
        for N in self.config.n_values:
            for epsilon in self.config.epsilons_for(N):
                yield IncarnationParams(N, epsilon)

    def _plugin_registry(self) -> Optional[PluginRegistry]:
        if self.config.plugins_dir is None:
            return None
        registry = PluginRegistry(self.config.plugins_dir)
        self.logger.info(f"Relation plugins: {', '.join(registry.list_plugins()) or 'none'}")
        return registry

    def verify(self) -> int:
        """Run the plain or affine relation suite over the configured range."""
        config = self.config
        registry = None if config.affine else self._plugin_registry()
        jobs: List[CheckJob] = []
        extra: List[VerificationEntry] = []
        for base in self._params():
            params = base.with_offset(config.perturb_D)
            if config.affine:
                self.logger.info(f"Affine suite at {params.label()}")
                jobs.extend(affine_jobs(params, config.modules))
                extra.extend(enmore_report(params).entries)
            else:
                self.logger.info(f"Relation suite at {params.label()}")
                plugin_relations = registry.collect_relations(params) if registry else []
                jobs.extend(relation_jobs(params, config.slow, plugin_relations))
        report = SuiteRunner(config.jobs, config.cache_dir).run(jobs, extra)
        write_json(report.to_list(), config.out)
        for entry in report.failures:
            print(
                f"{Colors.status(False)} {entry.relation} {entry.instance} "
                f"at N={entry.N}, epsilon={entry.epsilon:+d}"
            )
        self.logger.info(report.summary())
        print(f"{Colors.status(report.passed)} {report.summary()}")
        return EXIT_OK if report.passed else EXIT_ASSERTION

    def _diagram_for_eval(self, args: Namespace) -> Diagram:
        sources = [
            name
            for name in ("expression", "file", "monkey1", "monkey2")
            if getattr(args, name, None) is not None
        ]
        if len(sources) != 1:
            raise InvalidArgument("give exactly one of -e EXPR, FILE, --monkey1 r, --monkey2 r")
        if args.expression is not None:
            return parse_dsl(args.expression)
        if args.file is not None:
            path = Path(args.file)
            if path.suffix != DIAGRAM_FILE_SUFFIX:
                self.logger.warning(f"{path} does not end in {DIAGRAM_FILE_SUFFIX}")
            return parse_dsl(path.read_text(encoding="utf-8"))
        if args.monkey1 is not None:
            return monkey1(args.monkey1)
        return monkey2(args.monkey2)

    def _expected_eval(self, args: Namespace) -> Optional[ParamScalar]:
        if getattr(args, "monkey2", None) is not None:
            return falling_factorial(args.monkey2)
        if getattr(args, "monkey1", None) is not None and self.config.kappa == 1:
            return monkey1_value(args.monkey1)
        return None

    def _specialization_check(self, diagram: Diagram, params: IncarnationParams) -> Dict[str, Any]:
        evaluator = PoppingEvaluator(params.kappa, self.config.budget)
        result = evaluator.evaluate(diagram)
        record: Dict[str, Any] = {"N": params.N, "epsilon": params.epsilon, "reduced": result.reduced}
        if not result.reduced:
            record["passed"] = False
            return record
        try:
            generic = params.evaluate(result.value)
        except EvaluationPole as e:
            self.logger.warning(f"generic value has a pole at {params.label()}: {e}")
            record.update(pole=True, passed=True)
            return record
        concrete = incarnate(diagram, params).scalar()
        record.update(generic=str(generic), incarnation=str(concrete), passed=generic == concrete)
        return record

    def evaluate(self, args: Namespace) -> int:
        """Evaluate a closed diagram generically, then optionally at concrete N."""
        config = self.config
        diagram = self._diagram_for_eval(args)
        result = PoppingEvaluator(config.kappa, config.budget).evaluate(diagram)
        payload: Dict[str, Any] = result.to_dict()
        print(str(result.value))
        if not result.reduced:
            print(Colors.error(f"unreduced within {config.budget} steps; the value above is partial"))
            if config.out is not None:
                write_json(payload, config.out)
            return EXIT_RESOURCE
        status = EXIT_OK
        expected = self._expected_eval(args)
        if expected is not None:
            payload["expected"] = str(expected)
            if result.value != expected:
                print(f"{Colors.status(False)} expected {expected}")
                status = EXIT_ASSERTION
        checks = []
        for N in config.check_n:
            for epsilon in config.epsilons_for(N):
                record = self._specialization_check(diagram, IncarnationParams(N, epsilon))
                checks.append(record)
                print(
                    f"{Colors.status(record['passed'])} N={N}, epsilon={epsilon:+d}: "
                    f"{record.get('generic', '?')} vs incarnation {record.get('incarnation', '?')}"
                )
                if not record["reduced"]:
                    return EXIT_RESOURCE
                if not record["passed"]:
                    status = EXIT_ASSERTION
        if checks:
            payload["checks"] = checks
        if config.out is not None:
            write_json(payload, config.out)
        return status

    def _commutant(self, params: IncarnationParams) -> Dict[str, Any]:
        word = params.word(self.config.word)
        dimension = commutant_dim(word)
        record: Dict[str, Any] = {"commutantDim": dimension, "passed": True}
        if word.dimension <= DIRECT_COMMUTANT_MAX_DIMENSION:
            direct = commutant_dim_direct(word)
            record["direct"] = direct
            record["passed"] = direct == dimension
        print(f"commutant_dim({self.config.word}) at N={params.N} = {dimension}")
        return record

    def _barbell(self, params: IncarnationParams) -> Dict[str, Any]:
        rows = {}
        for r in self.config.r_values:
            algebra = barbell_algebra_dim(r, params)
            commutant = commutant_dim(params.word("S" * r))
            rows[str(r)] = {"barbellAlgebraDim": algebra, "commutantDim": commutant}
            print(f"r={r}, N={params.N}: barbell algebra {algebra}, commutant {commutant}")
        passed = all(row["barbellAlgebraDim"] == row["commutantDim"] for row in rows.values())
        return {"r": rows, "passed": passed}

    def _spectrum(self, params: IncarnationParams) -> Dict[str, Any]:
        summary = isotypic_spectrum(params.word(self.config.word))
        return {"summary": summary.to_dict(), "passed": summary.consistent}

    def _projectors(self, params: IncarnationParams) -> Dict[str, Any]:
        report: VerificationReport = projector_checks(params)
        print(f"N={params.N}: {report.summary()}")
        return {"entries": report.to_list(), "passed": report.passed}

    def _central(self, params: IncarnationParams) -> Dict[str, Any]:
        rows = {}
        passed = True
        for r in self.config.r_values:
            op = central_elements(r, params, self.config.modules)
            row = op.to_dict()
            row["central"] = op.is_central()
            passed = passed and row["central"]
            expected = _closed_form_central_scalar(r, params)
            if expected is not None:
                for letters in op.components:
                    if op.scalar_on(letters) != expected:
                        passed = False
            if r == 2 and "" in op.components and "V" in op.components:
                trivial, vector = op.scalar_on(""), op.scalar_on("V")
                if trivial is not None and vector is not None:
                    row["differenceVMinusEmpty"] = str(vector - trivial)
                    print(f"z_2 at N={params.N}: V minus empty = {vector - trivial}")
            rows[str(r)] = row
        return {"r": rows, "passed": passed}

    def _stand(self, params: IncarnationParams) -> Dict[str, Any]:
        dims = barbell_square_spectrum(params)
        size = params.word("SS").dimension
        print(f"beta^2 at N={params.N}: {dims}")
        return {"eigenspaces": {str(k): v for k, v in dims.items()}, "passed": sum(dims.values()) == size}

    def analyze(self, what: str) -> int:
        """Run one analytics routine over the configured N and epsilon."""
        if what not in ANALYSES:
            raise InvalidArgument(f"unknown analysis {what!r}; choose from {', '.join(ANALYSES)}")
        routine = getattr(self, f"_{what}")
        results = []
        for params in self._params():
            self.logger.info(f"{what} at {params.label()}")
            record = routine(params)
            record.update(N=params.N, epsilon=params.epsilon)
            results.append(record)
        passed = all(record["passed"] for record in results)
        write_json({"analysis": what, "results": results, "passed": passed}, self.config.out)
        print(f"{Colors.status(passed)} analyze {what}")
        return EXIT_OK if passed else EXIT_ASSERTION

    def symfunc(self, what: str) -> int:
        """Symmetric-function tables for W_r."""
        config = self.config
        if what not in SYMFUNC_TABLES:
            raise InvalidArgument(f"unknown table {what!r}; choose from {', '.join(SYMFUNC_TABLES)}")
        if config.basis not in BASES:
            raise InvalidArgument(f"basis must be one of {', '.join(BASES)}, got {config.basis!r}")
        passed = True
        payload: Dict[str, Any] = {"table": what}
        if what == "w":
            rows = {}
            for r in config.r_values:
                expansion = convert(w_r(r), config.basis)
                rows[str(r)] = expansion.to_dict()
                print(f"W_{r} = {expansion}")
            payload["w"] = rows
        elif what == "pairing":
            records = [pairing_check(r) for r in range(1, config.max_r + 1)]
            for record in records:
                print(
                    f"{Colors.status(record.passed)} r={record.r}: <W_r, p_r> = "
                    f"{record.computed}, |expected| = {record.magnitude}"
                )
            payload["pairing"] = [record.to_dict() for record in records]
            payload["tanh"] = tanh_check(max(config.max_r, 1))
            passed = all(record.passed for record in records) and payload["tanh"]
        elif what == "positivity":
            rows = schur_positivity_scan(config.max_r)
            for row in rows:
                print(f"{Colors.status(row.all_nonnegative)} W_{row.r} Schur-nonnegative")
            payload["positivity"] = [row.to_dict() for row in rows]
            passed = all(row.all_nonnegative for row in rows)
        else:
            steps = generation_solver(config.max_r)
            for step in steps:
                print(f"p_{step.r} = {step.expression()}")
            payload["generate"] = [step.to_dict() for step in steps]
            passed = all(step.solved for step in steps)
        payload["passed"] = passed
        if config.out is not None:
            write_json(payload, config.out)
        return EXIT_OK if passed else EXIT_ASSERTION


def _closed_form_central_scalar(r: int, params: IncarnationParams) -> Optional[CycloScalar]:
    """z_0 = D and z_1 = D·N(N-1)/8 on every module; nothing is asserted for r >= 2."""
    if r == 0:
        return CycloScalar.of(params.D)
    if r == 1:
        return CycloScalar.of(Fraction(params.D * params.N * (params.N - 1), 8))
    return None


def _core(command: str, args: Namespace) -> Core:
    return Core(build_run_config(command, args, load_preset(args)))


@exit_codes
def cmd_verify(args: Namespace) -> int:
    return _core("verify", args).verify()


@exit_codes
def cmd_eval(args: Namespace) -> int:
    return _core("eval", args).evaluate(args)


@exit_codes
def cmd_analyze(args: Namespace) -> int:
    return _core("analyze", args).analyze(args.what)


@exit_codes
def cmd_symfunc(args: Namespace) -> int:
    return _core("symfunc", args).symfunc(args.what)
