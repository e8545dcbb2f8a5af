import os

from lccc.errors import InputError

DEFAULT_LIMIT = 10_000
DEFAULT_SEED = 0
LISTING_TRUNCATION = 100

LIMIT_ENV_VAR = 'LCCC_LIMIT'

TERMINAL_NAME = '1'
TERMINAL_ELEMENT = '*'

# negative controls a diagram may inject into adjoint-check
CORRUPTIONS = ('swap-unit-counit', 'corrupt-transpose', 'corrupt-unit')

EXIT_OK = 0
EXIT_LAW_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_LIMIT = 3


def get_default_limit() -> int:
    value = os.environ.get(LIMIT_ENV_VAR)
    if not value:
        return DEFAULT_LIMIT
    try:
        limit = int(value)
    except ValueError:
        raise InputError(f'{LIMIT_ENV_VAR} must be an integer, got {value!r}')
    if limit <= 0:
        raise InputError(f'{LIMIT_ENV_VAR} must be positive, got {limit}')
    return limit
