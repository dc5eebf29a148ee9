"""CLI tests for skeingen."""
