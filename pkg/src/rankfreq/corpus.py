"""Text ingestion: tokenization and frequency counting.

Counting is deliberately dumb: one token per Unicode scalar in character
mode, maximal whitespace runs as separators in word mode.  There is no
linguistic segmentation; character mode is the supported path for unspaced
scripts.
"""

import codecs
import math
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DataFormatError

Token = str


@dataclass(frozen=True)
class TokenizerConfig:
    """Segmentation and filtering rules.

    In word mode whitespace is the separator, so ``drop_whitespace`` is
    forced on.
    """

    mode: str = "char"
    drop_whitespace: bool = False
    drop_punctuation: bool = False
    lowercase: bool = False

    def __post_init__(self):
        if self.mode not in ("char", "word"):
            raise ValueError(f"mode must be 'char' or 'word', got {self.mode!r}")
        if self.mode == "word":
            object.__setattr__(self, "drop_whitespace", True)


@dataclass(frozen=True, eq=True)
class FrequencyTable:
    """Token -> count mapping with totals.

    ``entries`` is treated as read-only after construction; counts are
    positive and may be real-valued (analytic tables flow through the same
    pipeline as counted corpora, integer counts stay exact).
    """

    entries: dict = field(default_factory=dict)
    total_tokens: float = 0
    vocabulary_size: int = 0

    @classmethod
    def from_entries(cls, entries: dict) -> "FrequencyTable":
        clean = {}
        for token, cnt in entries.items():
            if not isinstance(token, str) or not token:
                raise DataFormatError(f"invalid token {token!r}: must be a non-empty string")
            c = cnt if isinstance(cnt, int) else float(cnt)
            if not math.isfinite(float(c)) or c <= 0:
                raise DataFormatError(f"token {token!r} has non-positive count {cnt!r}")
            clean[token] = c
        if all(isinstance(c, int) for c in clean.values()):
            total = sum(clean.values())
        else:
            total = math.fsum(float(c) for c in clean.values())
        return cls(entries=clean, total_tokens=total, vocabulary_size=len(clean))

    @classmethod
    def empty(cls) -> "FrequencyTable":
        return cls(entries={}, total_tokens=0, vocabulary_size=0)


def _is_dropped_punct(ch: str) -> bool:
    # Unicode general categories P* (punctuation) and S* (symbols)
    return unicodedata.category(ch)[0] in ("P", "S")


def _finish_token(tok: str, config: TokenizerConfig) -> str:
    # Lowercasing is applied per token (never across token boundaries) so
    # that streamed and whole-string tokenization agree; lower() can
    # denormalize, hence the second NFC pass.
    if config.lowercase:
        tok = unicodedata.normalize("NFC", tok.lower())
    return tok


def tokenize(text: str, config: TokenizerConfig) -> list[Token]:
    """Split NFC-normalized text into tokens per the config.

    Character mode yields one token per Unicode scalar value surviving the
    drop filters; word mode splits on maximal whitespace runs.  Order is
    preserved.
    """
    text = unicodedata.normalize("NFC", text)
    out: list[Token] = []
    if config.mode == "word":
        for raw in text.split():
            if config.drop_punctuation:
                raw = "".join(c for c in raw if not _is_dropped_punct(c))
                if not raw:
                    continue
            out.append(_finish_token(raw, config))
        return out
    for ch in text:
        if config.drop_whitespace and ch.isspace():
            continue
        if config.drop_punctuation and _is_dropped_punct(ch):
            continue
        out.append(_finish_token(ch, config))
    return out


def count(tokens: Iterable[Token]) -> FrequencyTable:
    """Tally a token sequence. Permutation-invariant by construction."""
    return FrequencyTable.from_entries(dict(Counter(tokens)))


def merge(*tables: FrequencyTable) -> FrequencyTable:
    """Combine counts from several tables (commutative and associative)."""
    acc: Counter = Counter()
    for t in tables:
        acc.update(t.entries)
    return FrequencyTable.from_entries(dict(acc))


# --------------------------------------------------------------------------
# streaming ingestion


def _decoded_chunks(fh, chunk_bytes: int) -> Iterator[str]:
    """Decode a binary stream as UTF-8 incrementally.

    Raises DataFormatError naming the absolute byte offset of the first
    invalid byte.
    """
    decoder = codecs.getincrementaldecoder("utf-8")()
    fed = 0
    while True:
        raw = fh.read(chunk_bytes)
        final = not raw
        pending = len(decoder.getstate()[0])
        try:
            text = decoder.decode(raw, final)
        except UnicodeDecodeError as exc:
            # exc.start indexes into (pending bytes + this chunk)
            offset = fed - pending + exc.start
            raise DataFormatError(
                f"invalid UTF-8 at byte offset {offset}: {exc.reason}"
            ) from exc
        fed += len(raw)
        if text:
            yield text
        if final:
            return


def _nfc_safe_cut(buf: str) -> int:
    """Largest index i such that normalizing buf[:i] and buf[i:] separately
    equals normalizing the whole buffer. 0 when no such split was found."""
    whole = unicodedata.normalize("NFC", buf)
    candidates = 0
    for i in range(len(buf) - 1, 0, -1):
        if unicodedata.combining(buf[i]) != 0:
            continue
        # starters can still compose with what precedes them (Hangul jamo,
        # two-part vowel signs), so verify the split explicitly
        if (
            unicodedata.normalize("NFC", buf[:i]) + unicodedata.normalize("NFC", buf[i:])
            == whole
        ):
            return i
        candidates += 1
        if candidates >= 8:
            break
    return 0


def _boundary_cut(buf: str, mode: str) -> int:
    if mode == "word":
        # cut just before the last whitespace: the prefix ends on a complete
        # word and whitespace is always an NFC-safe boundary
        for i in range(len(buf) - 1, 0, -1):
            if buf[i].isspace():
                return i
        return 0
    return _nfc_safe_cut(buf)


def iter_file_tokens(
    path, config: TokenizerConfig, chunk_bytes: int = 1 << 16
) -> Iterator[Token]:
    """Tokenize a UTF-8 file in fixed-size chunks.

    Chunk boundaries are moved back to token/normalization boundaries, so
    the stream of tokens is identical to tokenizing the whole file at once.
    """
    buf = ""
    with open(path, "rb") as fh:
        for chunk in _decoded_chunks(fh, chunk_bytes):
            buf += chunk
            cut = _boundary_cut(buf, config.mode)
            if cut > 0:
                yield from tokenize(buf[:cut], config)
                buf = buf[cut:]
    if buf:
        yield from tokenize(buf, config)


def count_file(path, config: TokenizerConfig, chunk_bytes: int = 1 << 16) -> FrequencyTable:
    return count(iter_file_tokens(path, config, chunk_bytes=chunk_bytes))


# --------------------------------------------------------------------------
# pre-counted data (TSV "token<TAB>count")


def _parse_count(text: str, lineno: int):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise DataFormatError(f"line {lineno}: count {text!r} is not a number") from None
    if not math.isfinite(value):
        raise DataFormatError(f"line {lineno}: count {text!r} is not finite")
    return value


def load_counts(path) -> FrequencyTable:
    """Read a "token<TAB>count" TSV into a FrequencyTable.

    Duplicate tokens have their counts summed.  Malformed lines and
    non-positive counts are reported with their line number.
    """
    with open(path, "rb") as fh:
        text = "".join(_decoded_chunks(fh, 1 << 20))
    acc: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFormatError(
                f"line {lineno}: expected exactly one tab in 'token<TAB>count', got {line!r}"
            )
        token, count_text = parts
        if not token:
            raise DataFormatError(f"line {lineno}: empty token")
        value = _parse_count(count_text, lineno)
        if value <= 0:
            raise DataFormatError(f"line {lineno}: non-positive count {count_text!r}")
        token = unicodedata.normalize("NFC", token)
        if token in acc:
            acc[token] = acc[token] + value
        else:
            acc[token] = value
    return FrequencyTable.from_entries(acc)


def write_counts(table: FrequencyTable, path) -> None:
    """Write a FrequencyTable as TSV, most frequent first (ties by token).

    Tokens containing tab or newline characters cannot be represented in
    this format and are rejected.
    """
    from .ioutil import format_number

    rows = sorted(table.entries.items(), key=lambda kv: (-float(kv[1]), kv[0]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for token, cnt in rows:
            if any(c in token for c in "\t\n\r"):
                raise DataFormatError(
                    f"token {token!r} contains tab/newline; re-count with whitespace dropped"
                )
            fh.write(f"{token}\t{format_number(cnt)}\n")
