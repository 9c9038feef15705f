"""verify FILE."""
from __future__ import annotations

import argparse
from pathlib import Path

import orjson

from tamewild.core.app import RunOptions
from tamewild.core.errors import ReportInvalid
from tamewild.models.report import Report
from tamewild.services.verify import verify_report

from . import add_command


def verify(args: argparse.Namespace, options: RunOptions) -> Report:
    path = Path(args.file)
    try:
        data = orjson.loads(path.read_bytes())
    except OSError as exc:
        raise ReportInvalid(f"cannot read {path}: {exc.strerror}") from exc
    except orjson.JSONDecodeError as exc:
        raise ReportInvalid(f"{path} is not valid JSON: {exc}") from exc
    valid, reason = verify_report(data)
    return Report(
        command="verify",
        input={"file": str(path), "command": data.get("command")},
        verdict="Valid" if valid else "Invalid",
        result={"reason": reason},
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    p = add_command(subparsers, "verify", verify, "re-check the certificate or witness of a JSON report")
    p.add_argument("file")


__all__ = ["register", "verify"]
