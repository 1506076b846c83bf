from core.checks.report import CheckFailure, CheckReport
from core.checks.suites import DEFAULT_N_MAX, SUITES, SuiteRunner, grid
