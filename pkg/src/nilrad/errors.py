class NilradError(Exception):
    """Base class for all errors raised by nilrad."""


class AlgebraParseError(NilradError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CocycleError(NilradError):
    def __init__(self, triple: tuple[int, int, int], value) -> None:
        self.triple = triple
        self.value = value
        super().__init__(f"cocycle identity fails at {triple}: cyclic sum = {value}")


class NormalFormError(NilradError):
    """Algebra is not in the filiform normal form [e1, e_i] = e_{i+1}."""


class NotTorusAdaptedError(NilradError):
    def __init__(self) -> None:
        super().__init__("basis not torus-adapted: no diagonal pre-Einstein derivation")


class UnderdeterminedError(NilradError):
    def __init__(self, dim: int) -> None:
        self.dim = dim
        super().__init__(f"underdetermined: diagonal pre-Einstein solutions form a {dim}-dimensional space")


class NotApplicableError(NilradError):
    """The simple-spectrum criterion does not apply to this input."""


class CatalogError(NilradError, ValueError):
    """Family parameters out of range or at a coefficient pole."""


class CertificateError(NilradError):
    """Certificate malformed, mismatched, or internally inconsistent."""
