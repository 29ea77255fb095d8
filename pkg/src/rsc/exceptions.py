"""Exceptions that map to CLI exit codes."""

from typing import Optional, Dict, Any


class RSCError(Exception):
    """Base exception for computation errors that map to an exit status."""

    exit_code: int = 1
    error_type: str = "rsc_error"

    def __init__(
        self,
        detail: str,
        extra: Optional[Dict[str, Any]] = None,
        module: Optional[str] = None,
    ):
        self.detail = detail
        self.extra = extra or {}
        self.module = module or "rsc"
        super().__init__(detail)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a problem-details style dictionary."""
        return {
            "type": f"/errors/{self.error_type}",
            "title": self.__class__.__name__.replace("Error", ""),
            "module": self.module,
            "exit_code": self.exit_code,
            "detail": self.detail,
            **self.extra,
        }


class UsageError(RSCError):
    """Invalid command line or configuration."""

    exit_code = 2
    error_type = "usage_error"


class CapacityError(RSCError):
    """Input exceeds a configured capacity limit."""

    error_type = "capacity_error"


class DomainError(RSCError):
    """Argument outside the mathematical domain of an operation."""

    error_type = "domain_error"


class WidthError(RSCError):
    """Result does not fit the declared integer width."""

    error_type = "width_error"


class InputError(RSCError):
    """Missing or inconsistent input data."""

    error_type = "input_error"


class PrecisionError(RSCError):
    """Requested precision cannot be certified."""

    error_type = "precision_error"


class ConsistencyError(RSCError):
    """An integral identity produced a remainder or two paths disagree."""

    error_type = "consistency_error"


class AcceptanceError(RSCError):
    """One or more acceptance gates failed."""

    error_type = "acceptance_error"


U63_MAX = 2**63 - 1


def check_width(value: int, what: str, module: str, limit: int = U63_MAX) -> int:
    """Return ``value`` unchanged or raise WidthError when it exceeds ``limit``."""
    if value > limit:
        raise WidthError(
            f"{what} = {value} exceeds the {limit.bit_length()}-bit limit",
            extra={"limit": str(limit)},
            module=module,
        )
    return value
