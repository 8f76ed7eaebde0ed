"""Stance data ingestion.

Two input formats are supported:

* the FNC-1 distribution (``*_stances.csv`` with ``Headline,Body ID,Stance``
  and ``*_bodies.csv`` with ``Body ID,articleBody``), and
* a generic stance table with header ``topic_id,news_id,stance``.

Both are normalized into a :class:`Corpus` holding the topic, news and
stance tables.
"""
from __future__ import annotations

import csv
import enum
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import FormatError, RecordError

PathLike = Union[str, os.PathLike]

FNC_STANCE_COLUMNS = ("Headline", "Body ID", "Stance")
FNC_BODY_COLUMNS = ("Body ID", "articleBody")
TABLE_COLUMNS = ("topic_id", "news_id", "stance")


class Stance(enum.IntEnum):
    AGREE = 0
    DISAGREE = 1
    DISCUSS = 2
    UNRELATED = 3

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value) -> "Stance":
        """Accept a label (any case) or a numeric code 0-3."""
        if isinstance(value, Stance):
            return value
        if isinstance(value, int):
            return cls(value)
        text = str(value).strip()
        if text.isdigit():
            return cls(int(text))
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown stance {value!r}") from None

    def opposes(self, other: "Stance") -> bool:
        return {self, other} == {Stance.AGREE, Stance.DISAGREE}


class StanceRecord(NamedTuple):
    topic_id: int
    news_id: int
    stance: Stance


@dataclass(frozen=True)
class Corpus:
    """The three reconstructed tables: topics, news articles and stances."""

    topics: dict = field(default_factory=dict)
    articles: dict = field(default_factory=dict)
    stances: tuple = ()
    #: number of stance rows read before identical triples were collapsed
    source_rows: int = field(default=None, compare=False)

    def __post_init__(self):
        if self.source_rows is None:
            object.__setattr__(self, "source_rows", len(self.stances))
        for rec in self.stances:
            if rec.topic_id not in self.topics:
                raise FormatError(f"stance references unknown topic {rec.topic_id}")
            if rec.news_id not in self.articles:
                raise FormatError(f"stance references unknown article {rec.news_id}")

    @classmethod
    def from_records(cls, records: Iterable, topics=None, articles=None) -> "Corpus":
        """Build a corpus from ``(topic_id, news_id, stance)`` triples.

        Missing topics/articles are created with empty text. Identical
        triples are collapsed, keeping the first occurrence.
        """
        topics = dict(topics or {})
        articles = dict(articles or {})
        seen = set()
        stances = []
        n_rows = 0
        for topic_id, news_id, stance in records:
            n_rows += 1
            rec = StanceRecord(int(topic_id), int(news_id), Stance.parse(stance))
            if rec in seen:
                continue
            seen.add(rec)
            topics.setdefault(rec.topic_id, "")
            articles.setdefault(rec.news_id, "")
            stances.append(rec)
        return cls(topics, articles, tuple(stances), n_rows)

    def without_text(self) -> "Corpus":
        """Copy with headline and body text blanked (what the generic table keeps)."""
        return Corpus(
            {k: "" for k in self.topics},
            {k: "" for k in self.articles},
            self.stances,
            self.source_rows,
        )


def _read_rows(path, required):
    """Yield ``(line_number, row_dict)`` after validating the header."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = [h.strip() for h in (reader.fieldnames or [])]
        for col in required:
            if col not in header:
                raise FormatError(f"{path}: missing column {col!r}")
        reader.fieldnames = header
        for row in reader:
            yield reader.line_num, row


def _as_list(paths) -> list:
    if paths is None:
        return []
    if isinstance(paths, (str, os.PathLike)):
        return [paths]
    return list(paths)


def parse_fnc(
    stances_csv: Union[PathLike, Sequence[PathLike]],
    bodies_csv: Union[PathLike, Sequence[PathLike], None] = None,
) -> Corpus:
    """Parse FNC-1 stance and body files into a :class:`Corpus`.

    Several files may be given for each argument (e.g. train then
    competition test); they are concatenated in the order supplied.
    Each distinct trimmed headline becomes a topic, numbered from 1 in
    order of first appearance. Body IDs are used verbatim as news ids.
    When no body file is given, articles are created from the Body IDs in
    the stance files with empty text.
    """
    articles: dict = {}
    for path in _as_list(bodies_csv):
        for line, row in _read_rows(path, FNC_BODY_COLUMNS):
            news_id = _parse_id(row["Body ID"], "Body ID", line, path)
            body = row["articleBody"] or ""
            if news_id in articles and articles[news_id] != body:
                raise FormatError(
                    f"{path}:{line}: duplicate Body ID {news_id} with different text"
                )
            articles[news_id] = body
    have_bodies = bool(_as_list(bodies_csv))

    topics: dict = {}
    by_headline: dict = {}
    records = []
    for path in _as_list(stances_csv):
        for line, row in _read_rows(path, FNC_STANCE_COLUMNS):
            headline = (row["Headline"] or "").strip()
            news_id = _parse_id(row["Body ID"], "Body ID", line, path)
            try:
                stance = Stance.parse(row["Stance"] or "")
            except ValueError:
                raise RecordError(
                    f"unknown stance label {row['Stance']!r}", line, path
                ) from None
            if news_id not in articles:
                if have_bodies:
                    raise RecordError(f"Body ID {news_id} not in body files", line, path)
                articles[news_id] = ""
            topic_id = by_headline.get(headline)
            if topic_id is None:
                topic_id = len(by_headline) + 1
                by_headline[headline] = topic_id
                topics[topic_id] = headline
            records.append((topic_id, news_id, stance))
    return Corpus.from_records(records, topics, articles)


def _parse_id(text, column, line, path) -> int:
    text = (text or "").strip()
    try:
        value = int(text)
    except ValueError:
        raise RecordError(f"non-integer {column} {text!r}", line, path) from None
    if value < 0:
        raise RecordError(f"negative {column} {value}", line, path)
    return value


def parse_stance_table(path: PathLike) -> Corpus:
    """Parse a generic ``topic_id,news_id,stance`` CSV (stance as label or code)."""
    records = []
    for line, row in _read_rows(path, TABLE_COLUMNS):
        topic_id = _parse_id(row["topic_id"], "topic_id", line, path)
        news_id = _parse_id(row["news_id"], "news_id", line, path)
        try:
            stance = Stance.parse(row["stance"] or "")
        except ValueError:
            raise RecordError(f"unknown stance {row['stance']!r}", line, path) from None
        records.append((topic_id, news_id, stance))
    return Corpus.from_records(records)


def write_stance_table(corpus: Corpus, path: PathLike) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for rec in corpus.stances:
            writer.writerow((rec.topic_id, rec.news_id, rec.stance.label))


def corpus_stats(corpus: Corpus) -> dict:
    counts = Counter(rec.stance for rec in corpus.stances)
    return {
        "n_topics": len(corpus.topics),
        "n_articles": len(corpus.articles),
        "n_stances": corpus.source_rows,
        "n_unique_stances": len(corpus.stances),
        "stance_histogram": {s.label: counts.get(s, 0) for s in Stance},
    }
