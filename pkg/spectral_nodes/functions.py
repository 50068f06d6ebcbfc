"""Builtin target functions and Volterra benchmark problems, looked up by id."""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from spectral_nodes.exceptions import UnknownFunctionError, UnknownProblemError


@dataclass(frozen=True)
class TargetFunction:
    name: str
    value: Callable
    derivative: Callable

    def __call__(self, x):
        return self.value(x)


@dataclass(frozen=True)
class VolterraBenchmark:
    """int_0^t kernel(t, xi) solution(xi) dxi = rhs(t), with rhs and rhs' in closed form."""

    name: str
    kernel: Callable
    solution: Callable
    rhs: Callable
    rhs_derivative: Callable


class Registry:
    def __init__(self, kind, error_class):
        self.kind = kind
        self.error_class = error_class
        self._entries = {}

    def register(self, entry):
        self._entries[entry.name] = entry
        return entry

    def is_registered(self, name):
        return name in self._entries

    def get(self, name):
        try:
            return self._entries[name]
        except KeyError as err:
            choices = ", ".join(self.names())
            raise self.error_class(f"unknown {self.kind} '{name}' (choose from {choices})") from err

    def unregister(self, name):
        try:
            del self._entries[name]
        except KeyError as err:
            raise self.error_class(f"{self.kind} '{name}' not found.") from err

    def names(self):
        return tuple(sorted(self._entries))


functions = Registry("function", UnknownFunctionError)
problems = Registry("problem", UnknownProblemError)


def resolve_function(f):
    """Accept a registered id or a `TargetFunction`."""
    if isinstance(f, TargetFunction):
        return f
    return functions.get(f)


def resolve_problem(problem):
    if isinstance(problem, VolterraBenchmark):
        return problem
    return problems.get(problem)


def _runge(x):
    return 1.0 / (1.0 + 25.0 * np.square(x))


def _runge_derivative(x):
    return -50.0 * x / np.square(1.0 + 25.0 * np.square(x))


def _exp_sq(x):
    return np.exp(np.square(x))


def _exp_sq_derivative(x):
    return 2.0 * x * np.exp(np.square(x))


def _negative_sin(x):
    return -np.sin(x)


functions.register(TargetFunction("exp", np.exp, np.exp))
functions.register(TargetFunction("cos", np.cos, _negative_sin))
functions.register(TargetFunction("runge", _runge, _runge_derivative))
functions.register(TargetFunction("exp_sq", _exp_sq, _exp_sq_derivative))


_PI_SQ_PLUS_ONE = 1.0 + np.pi**2


def _exp_kernel(t, xi):
    return np.exp(t - xi)


def _cos_pi(t):
    return np.cos(np.pi * t)


def _exp_kernel_cos_rhs(t):
    return (np.pi * np.sin(np.pi * t) - np.cos(np.pi * t) + np.exp(t)) / _PI_SQ_PLUS_ONE


def _exp_kernel_cos_rhs_derivative(t):
    return _exp_kernel_cos_rhs(t) + np.cos(np.pi * t)


def _unit_kernel(t, xi):
    return np.ones(np.broadcast(t, xi).shape)


def _one(t):
    return np.ones(np.shape(t))


def _identity(t):
    return np.asarray(t, dtype=float)


problems.register(
    VolterraBenchmark(
        "expker-cospi",
        kernel=_exp_kernel,
        solution=_cos_pi,
        rhs=_exp_kernel_cos_rhs,
        rhs_derivative=_exp_kernel_cos_rhs_derivative,
    )
)
problems.register(
    VolterraBenchmark(
        "unit-kernel",
        kernel=_unit_kernel,
        solution=_one,
        rhs=_identity,
        rhs_derivative=_one,
    )
)
