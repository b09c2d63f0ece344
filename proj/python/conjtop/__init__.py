"""Python access to the conjtop library.

The heavy lifting lives in the compiled ``_conjtop`` extension; this package
re-exports it and adds a couple of shortcuts over :func:`run`.
"""

from ._conjtop import (
    InputError,
    Model,
    ModelIntegrityError,
    arf,
    betti_numbers,
    brown,
    characteristic_class,
    commands,
    euler_characteristic,
    gauss_sum,
    is_even,
    kharlamov_check,
    library,
    load_model,
    parse_model,
    pin_value,
    run,
    spin_value,
)

__all__ = [
    "InputError",
    "Model",
    "ModelIntegrityError",
    "arf",
    "betti_numbers",
    "brown",
    "characteristic_class",
    "classify",
    "commands",
    "euler_characteristic",
    "gauss_sum",
    "is_even",
    "kharlamov_check",
    "library",
    "load_model",
    "parse_model",
    "pin_value",
    "run",
    "spin_value",
]


def classify(name, h=None, model=None):
    """Type verdict (``I_abs``, ``I_rel`` or ``II``) of a bundled involution."""
    report = run("classify", name, model=model, h=h)
    if report["status"] != 0:
        raise InputError(report["values"].get("error", "classification failed"))
    return report["values"]["type"]
