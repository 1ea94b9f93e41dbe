from fibtile.verify.runner import VERIFY_DEFAULTS, SuiteResult, VerifyRunner, format_report, load_config_from_file
from fibtile.verify.status import Status, StatusCode
from fibtile.verify.suites import SUITE_MAP, SUITES, Suite
