"""Command-line application factory.

Builds the argparse tree from the command routers, loads .env files,
configures logging and binds a run id for every invocation.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
import uuid
from pathlib import Path
from typing import Sequence

import orjson
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError
from structlog.contextvars import bind_contextvars, clear_contextvars

from tamewild.algebra.context import Context
from tamewild.core.errors import TameWildError, error_body, exit_code_for
from tamewild.core.logging import configure_logging, get_logger
from tamewild.core.settings import override_settings


class RunOptions(BaseModel):
    """Per-invocation view of settings after CLI overrides."""

    json_output: bool = Field(False, description="Print the JSON report instead of text")
    variables: tuple[str, ...] = Field(("x", "y", "z"), description="Generators of K<X>")
    z_variables: tuple[str, ...] = Field(("z1", "z2"), description="Variables of K[Z]")
    max_degree: int = Field(8, description="Nonassociative membership degree guard")

    model_config = {"extra": "forbid", "frozen": True}

    @property
    def context(self) -> Context:
        return Context(self.variables)

    @property
    def z_context(self) -> Context:
        return Context(self.z_variables)


def _load_env() -> None:
    candidates: list[Path] = []
    explicit = os.getenv("ENV_FILE")
    if explicit:
        candidates.append(Path(explicit))
    candidates.append(Path.cwd() / ".env")
    project_root = Path(__file__).resolve().parents[2]
    if project_root / ".env" not in candidates:
        candidates.append(project_root / ".env")
    loaded = False
    for candidate in candidates:
        if candidate.exists():
            load_dotenv(dotenv_path=candidate, override=False)
            loaded = True
    if not loaded:
        get_logger("env").debug("env_load_skipped", reason="no .env found", searched=[str(p) for p in candidates])


def create_app() -> argparse.ArgumentParser:
    """Create the argument parser with every command group registered."""
    from tamewild.commands import auto, coord, deriv, examples, ge2, metab, natree, verify

    parser = argparse.ArgumentParser(
        prog="tamewild",
        description="Exact tame/wild decisions for automorphisms of free algebras.",
    )
    parser.add_argument("--json", action="store_true", default=None, help="print the JSON report")
    parser.add_argument("--max-degree", type=int, default=None, help="nonassociative membership degree guard")
    parser.add_argument("--vars", default=None, help="generators of K<X>, e.g. x,y,z")
    parser.add_argument("--zvars", default=None, help="variables of K[Z] for ge2 commands, e.g. z1,z2")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for router in (ge2, coord, auto, examples, deriv, metab, natree, verify):
        router.register(subparsers)
    return parser


def _options(args: argparse.Namespace) -> RunOptions:
    try:
        settings = override_settings(
            JSON_OUTPUT=args.json,
            MAX_DEGREE=args.max_degree,
            DEFAULT_VARIABLES=args.vars,
            DEFAULT_Z_VARIABLES=args.zvars,
        )
    except ValidationError as exc:
        override_settings()
        raise TameWildError(f"invalid option: {exc.errors()[0]['msg']}") from exc
    return RunOptions(
        json_output=settings.JSON_OUTPUT,
        variables=settings.variables,
        z_variables=settings.z_variables,
        max_degree=settings.MAX_DEGREE,
    )


def main(argv: Sequence[str] | None = None) -> int:
    _load_env()
    parser = create_app()
    args = parser.parse_args(argv)
    run_id = uuid.uuid4().hex
    clear_contextvars()
    bind_contextvars(run_id=run_id)
    json_output = bool(args.json)
    configure_logging()
    try:
        options = _options(args)
        json_output = options.json_output
        logger = get_logger()
        start = time.perf_counter()
        report = args.handler(args, options)
        report.timing_ms = round((time.perf_counter() - start) * 1000.0, 2)
        logger.info("command_complete", command=report.command, verdict=report.verdict, duration_ms=report.timing_ms)
    except TameWildError as exc:
        return _handle_error(exc, run_id, json_output)
    except Exception as exc:  # noqa: BLE001
        get_logger().error("unhandled_exception", error=str(exc), exc_info=True)
        return _handle_error(exc, run_id, json_output)
    finally:
        clear_contextvars()
    if json_output:
        sys.stdout.write(report.to_json().decode() + "\n")
    else:
        sys.stdout.write(report.render_text() + "\n")
    return 1 if report.verdict == "Invalid" else 0


def _handle_error(exc: BaseException, run_id: str, json_output: bool) -> int:
    body = error_body(exc, run_id)
    get_logger().warning("command_failed", **body)
    if json_output:
        sys.stdout.write(orjson.dumps({"error": body}).decode() + "\n")
    else:
        sys.stderr.write(f"error: {body['message']} [{body['code']}]\n")
    return exit_code_for(exc)


__all__ = ["RunOptions", "create_app", "main"]
