#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Unit tests for error reporting in the CLI entry point.
"""

import pytest

from wgeo.cli import cli


@pytest.mark.parametrize(
    "error, message",
    [
        (KeyError("No vertex labeled x"), "No vertex labeled x\n"),
        (KeyError(), "\n"),
        (ValueError("Orbit cap must be >= 1"), "Orbit cap must be >= 1\n"),
    ],
)
def test_input_errors_print_the_bare_message(
    monkeypatch, capsys, error, message
):
    def failing(args):
        raise error

    monkeypatch.setitem(cli.COMMANDS, "graph", failing)
    assert cli.main(["graph", "abAB"]) == cli.EXIT_INPUT
    assert capsys.readouterr().err == message
