"""Tests for labelana."""
