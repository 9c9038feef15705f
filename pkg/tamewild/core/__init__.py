"""Core package (settings, logging, CLI factory, errors)."""
