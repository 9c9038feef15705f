"""CLI command routers; each module exposes ``register(subparsers)``.

Handlers take ``(args, options)`` and return a :class:`~tamewild.models.report.Report`.
"""
from __future__ import annotations

import argparse
from typing import Any, Callable

from tamewild.core.app import RunOptions
from tamewild.models.report import Report

Handler = Callable[[argparse.Namespace, RunOptions], Report]


def add_command(group: Any, name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
    parser = group.add_parser(name, help=help, description=help)
    parser.set_defaults(handler=handler)
    return parser


def names(context: Any) -> str:
    return ",".join(context.names)


__all__ = ["Handler", "add_command", "names"]
