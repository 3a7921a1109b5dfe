"""Pure string normalization shared by the model and preprocessing layers.

Turkish casefolding differs from the Unicode default for the dotted and
dotless i, so ``str.lower`` alone is wrong for tags: ``"ILICA".lower()``
gives ``"ilica"`` where a Turkish reader expects ``"ılıca"``.
"""

import unicodedata

TURKISH_ALPHABET = (
    "a", "b", "c", "ç", "d", "e", "f", "g", "ğ", "h", "ı", "i", "j", "k", "l",
    "m", "n", "o", "ö", "p", "r", "s", "ş", "t", "u", "ü", "v", "y", "z",
)

_RANK = {letter: i for i, letter in enumerate(TURKISH_ALPHABET)}

DEFAULT_INDEX_PAGES = frozenset(
    {"index.html", "index.htm", "index.php", "default.asp", "default.aspx"}
)


def turkish_lowercase(s: str) -> str:
    """Lowercase *s* with Turkish rules: ``İ`` -> ``i`` and ``I`` -> ``ı``.

    Input and output are NFC-normalized, so a decomposed ``I`` + combining
    dot above folds to plain ``i`` as well.
    """
    s = unicodedata.normalize("NFC", s)
    s = s.replace("İ", "i").replace("İ", "i").replace("I", "ı")
    return unicodedata.normalize("NFC", s.lower())


def turkish_sort_key(word: str) -> tuple:
    """Collation key in Turkish alphabet order (c < ç < d, ı < i, ...).

    Characters outside the alphabet sort after every letter, by code point.
    """
    n = len(TURKISH_ALPHABET)
    return tuple((_RANK[c], "") if c in _RANK else (n, c) for c in word)


def _lower_host(host: str) -> str:
    return host.replace("İ", "i").lower()


def _normalize_once(url: str) -> str:
    url = url.strip()
    url = url.split("#", 1)[0]
    low = url.lower()
    for scheme in ("http://", "https://"):
        if low.startswith(scheme):
            url = url[len(scheme):]
            break
    cut = len(url)
    for delim in "/?":
        pos = url.find(delim)
        if pos != -1:
            cut = min(cut, pos)
    url = _lower_host(url[:cut]) + url[cut:]
    if url.startswith("www."):
        url = url[4:]
    while True:
        stripped = url.rstrip("/")
        head, sep, last = stripped.rpartition("/")
        if sep and last.lower() in DEFAULT_INDEX_PAGES:
            stripped = head
        if stripped == url:
            return url
        url = stripped


def normalize_url(raw: str) -> str:
    """Canonical form of a bookmarked URL.

    Strips the fragment, the http(s) scheme, a leading ``www.``, a terminal
    default index page and trailing slashes, and lowercases the host. Query
    strings are kept. The rules are applied until the result is stable, so
    the function is idempotent even for inputs like ``a.com/index.html/``.

    Raises ValueError if nothing is left.
    """
    url = raw
    while True:
        nxt = _normalize_once(url)
        if nxt == url:
            break
        url = nxt
    if not url:
        raise ValueError(f"malformed URL: {raw!r}")
    return url
