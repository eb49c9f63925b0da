"""Exception types shared across the toolkit."""


class KatsuyoError(Exception):
    """Base class for all toolkit errors."""


class UnknownLabel(KatsuyoError):
    def __init__(self, token: str):
        super().__init__(f"unknown feature label: {token!r}")
        self.token = token


class InvariantViolation(KatsuyoError):
    pass


class MalformedLemma(KatsuyoError):
    pass


class TemplateNotApplicable(KatsuyoError):
    pass


class ParseError(KatsuyoError):
    def __init__(self, path, line_no: int, reason: str):
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = path
        self.line_no = line_no
        self.reason = reason


class CountMismatch(KatsuyoError):
    def __init__(self, what: str, expected: int, actual: int):
        super().__init__(f"{what}: expected {expected}, got {actual}")
        self.what = what
        self.expected = expected
        self.actual = actual


class DanglingHonorificLink(KatsuyoError):
    def __init__(self, lemma: str):
        super().__init__(f"honorific entry {lemma!r} is not linked from any basic verb")
        self.lemma = lemma


class DuplicateRuleId(KatsuyoError):
    def __init__(self, rule_id: str):
        super().__init__(f"duplicate rule id: {rule_id!r}")
        self.rule_id = rule_id


class UnknownLemma(KatsuyoError):
    def __init__(self, lemma: str):
        super().__init__(f"lemma not in lexicon: {lemma!r}")
        self.lemma = lemma


class MissingHitRecord(KatsuyoError):
    def __init__(self, form: str):
        super().__init__(f"no hit record for form: {form!r}")
        self.form = form


class DuplicateEntry(KatsuyoError):
    pass


class ProviderUnavailable(KatsuyoError):
    pass


class QuotaExceeded(KatsuyoError):
    """Raised when a hit provider runs out of quota mid-batch.

    Carries the partial cache collected so far plus the index of the first
    unfetched form, so a caller can resume later without refetching.
    """

    def __init__(self, message: str, partial_cache=None, resume_index: int = 0):
        super().__init__(message)
        self.partial_cache = partial_cache
        self.resume_index = resume_index
