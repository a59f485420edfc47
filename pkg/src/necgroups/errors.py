"""Exception hierarchy shared by every module of the package."""


class NecError(Exception):
    """Base class for all errors raised by necgroups."""


class SignatureSyntaxError(NecError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class InvalidSignature(NecError, ValueError):
    """A signature that parses but does not describe an NEC group."""


class BadPeriod(InvalidSignature):
    def __init__(self, value, where):
        self.value = value
        self.where = where
        super().__init__(f"{where} must be >= 2, got {value}")


class NotHyperbolic(InvalidSignature):
    def __init__(self, mu):
        self.mu = mu
        kind = "Euclidean" if mu == 0 else "spherical"
        super().__init__(f"hyperbolic measure is {mu} ({kind}); must be > 0")


class NonOrientableGenusZero(InvalidSignature):
    def __init__(self):
        super().__init__("a non-orientable signature needs genus >= 1")


class WrongSign(NecError, ValueError):
    pass


class NotFuchsian(NecError, ValueError):
    pass


class ElementNotInRing(NecError, ValueError):
    pass


class NonHomogeneous(NecError, ValueError):
    pass
