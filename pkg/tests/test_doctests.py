import doctest

from centroperm import perms, series


def test_module_doctests():
    for mod in (perms, series):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
        assert result.attempted > 0, mod.__name__
