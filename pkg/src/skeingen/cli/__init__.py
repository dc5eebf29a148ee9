"""CLI module for skeingen.

This package contains all Click command definitions for the skeingen CLI.
"""
