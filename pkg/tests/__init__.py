"""Tests for skeingen."""
