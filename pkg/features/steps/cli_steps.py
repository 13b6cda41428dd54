# pylint: disable=function-redefined, missing-function-docstring
# flake8: noqa
"""
Command Line Steps

Steps file for cases.feature
"""
import os
import shlex

from behave import given, when, then

from mixsolver.cases import case_names
from mixsolver.cli import cli
from mixsolver.common import writers


@given('the registered cases are available')
def step_impl(context):
    """ Make sure the registry is loaded """
    context.cases = case_names()
    assert len(context.cases) > 0


@when('I run "{command}"')
def step_impl(context, command):
    """ Invoke the command line with the given arguments """
    context.arguments = shlex.split(command)
    context.result = context.runner.invoke(cli, context.arguments)
    context.output = os.path.splitext(context.arguments[context.arguments.index("--out") + 1])[0] \
        if "--out" in context.arguments else None


@then('the command should succeed')
def step_impl(context):
    assert context.result.exit_code == 0, context.result.output


@then('the command should fail with exit code {code:d}')
def step_impl(context, code):
    assert context.result.exit_code == code, context.result.output


@then('I should see "{text}" in the output')
def step_impl(context, text):
    assert text in context.result.output, context.result.output


@then('the file "{filename}" should exist')
def step_impl(context, filename):
    assert os.path.exists(filename)


@then('the file "{filename}" should have {rows:d} rows')
def step_impl(context, filename, rows):
    columns = writers.read_csv(filename)
    assert columns["x"].size == rows


@then('the metric "{name}" should be at most {bound:g}')
def step_impl(context, name, bound):
    metrics = writers.read_metrics(context.output + ".metrics")
    assert metrics[name] <= bound, f"{name}={metrics[name]}"


@then('the metric "{name}" should be at least {bound:g}')
def step_impl(context, name, bound):
    metrics = writers.read_metrics(context.output + ".metrics")
    assert metrics[name] >= bound, f"{name}={metrics[name]}"
