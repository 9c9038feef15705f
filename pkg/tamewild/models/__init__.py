"""Pydantic models for certificates, verdicts, outcomes and reports."""
