"""Tests for ehrhart-check."""
