"""
Environment for Behave Testing
"""
import os
import shutil
import tempfile

from click.testing import CliRunner

from mixsolver.common.log_handlers import init_logging

LOG_LEVEL = os.getenv("MIXSOLVER_BEHAVE_LOG_LEVEL", "WARNING")


def before_all(context):
    """ Executed once before all tests """
    context.runner = CliRunner()
    init_logging("mixsolver", LOG_LEVEL.upper())
    context.config.setup_logging()


def before_scenario(context, scenario):  # pylint: disable=unused-argument
    """ Every scenario works in a fresh directory """
    context.home = os.getcwd()
    context.workdir = tempfile.mkdtemp(prefix="mixsolver-")
    os.chdir(context.workdir)


def after_scenario(context, scenario):  # pylint: disable=unused-argument
    """ Executed after every scenario """
    os.chdir(context.home)
    shutil.rmtree(context.workdir, ignore_errors=True)
