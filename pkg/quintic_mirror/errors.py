from __future__ import annotations

from typing import Any


class QuinticError(Exception):
    """Base class for every failure raised by the quintic mirror engine."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self._details = details

    def details(self) -> dict[str, Any]:
        return {key: _jsonable(value) for key, value in self._details.items()}


class RingMismatchError(QuinticError):
    pass


class NonUnitError(QuinticError):
    """Division by a ring element that has no inverse."""

    def __init__(self, element: Any, context: str = "") -> None:
        where = f" in {context}" if context else ""
        super().__init__(f"element {element} is not a unit{where}", element=element)
        self.element = element


class InvalidSubstitutionError(QuinticError):
    pass


class PoleMultiplicityError(QuinticError):
    def __init__(self, pole: Any, order: int) -> None:
        super().__init__(f"pole at {pole} has order {order}, expected 1", pole=pole, order=order)
        self.pole = pole
        self.order = order


class TruncationError(QuinticError):
    pass


class DegenerateWeightsError(QuinticError):
    def __init__(self, message: str, pairs: list[Any] | None = None) -> None:
        super().__init__(message, pairs=pairs or [])
        self.pairs = pairs or []


class WeightParseError(QuinticError):
    def __init__(self, position: int, token: str, reason: str) -> None:
        super().__init__(
            f"cannot parse weight #{position} ({token!r}): {reason}",
            position=position,
            token=token,
        )
        self.position = position
        self.token = token


class StructureError(QuinticError):
    pass


class NormalizationError(QuinticError):
    pass


class ConsistencyError(QuinticError):
    pass


class MalformedCouplingError(QuinticError):
    pass


class IntegralityError(QuinticError):
    def __init__(self, degree: int, value: Any) -> None:
        super().__init__(f"n_{degree} = {value} is not an integer", d=degree, value=value)
        self.degree = degree
        self.value = value


class InsufficientZOrderError(QuinticError):
    def __init__(self, degree: int, nullity: int, z_order: int) -> None:
        super().__init__(
            f"degree {degree}: {nullity} free parameters remain with z_order={z_order}; "
            "increase --z-order",
            d=degree,
            nullity=nullity,
            z_order=z_order,
        )
        self.degree = degree
        self.nullity = nullity


class NoPolynomialSolutionError(QuinticError):
    def __init__(self, degree: int) -> None:
        super().__init__(
            f"degree {degree}: no initial condition yields a polynomial solution", d=degree
        )
        self.degree = degree


class TheoremViolationError(QuinticError):
    pass


def _jsonable(value: Any) -> Any:
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    return str(value)
