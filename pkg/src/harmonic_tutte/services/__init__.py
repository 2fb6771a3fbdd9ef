"""Orchestration between the CLI and the library: loading inputs and running checks."""
