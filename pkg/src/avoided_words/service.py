"""HTTP service exposing the analysis pipeline.

POST /analyze returns structured JSON; POST /report returns the same
tab-separated report the command line writes, byte for byte; GET
/health is a liveness probe.  Request validation mirrors the command
line: k > 2 unless all_lengths, rho < 0, palindrome marking only for
the dna alphabet.
"""

from __future__ import annotations

import io
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .dna import mark_palindromes
from .errors import InputError, InternalConsistencyError
from .fasta_io import InputPolicy, read_fasta, write_report
from .pipeline import analyze_sequences

__all__ = ["create_app", "entry", "AnalyzeRequest", "AnalyzeResponse"]

_AMBIGUOUS_FLAG = {
    "reject": "reject",
    "skip": "skip-record",
    "split": "split-at-ambiguous",
}


class RecordIn(BaseModel):
    id: str = Field(min_length=1)
    data: str = Field(min_length=1)


class AnalyzeRequest(BaseModel):
    fasta: Optional[str] = None
    sequences: Optional[list[RecordIn]] = None
    k: Optional[int] = Field(default=None, gt=2)
    rho: float = Field(lt=0)
    all_lengths: bool = False
    alphabet: Literal["dna", "protein", "auto"] = "dna"
    ambiguous: Literal["reject", "skip", "split"] = "split"
    mark_palindromes: bool = False
    precision: int = Field(default=6, ge=1, le=17)
    threads: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check(self):
        if (self.fasta is None) == (self.sequences is None):
            raise ValueError("provide exactly one of fasta and sequences")
        if self.all_lengths == (self.k is not None):
            raise ValueError("provide exactly one of k and all_lengths")
        if self.mark_palindromes and self.alphabet != "dna":
            raise ValueError("mark_palindromes needs the dna alphabet")
        return self


class WordOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    word: str
    length: int
    word_class: str = Field(serialization_alias="class")
    f: int
    expected: float
    std: float
    palindrome: Optional[bool] = None


class SequenceOut(BaseModel):
    id: str
    words: list[WordOut]


class AnalyzeResponse(BaseModel):
    results: list[SequenceOut]


def _analyze(request: AnalyzeRequest) -> list:
    policy = InputPolicy(request.alphabet, _AMBIGUOUS_FLAG[request.ambiguous])
    try:
        if request.fasta is not None:
            seqs = read_fasta(io.StringIO(request.fasta), policy)
        else:
            text = "".join(f">{r.id}\n{r.data}\n" for r in request.sequences)
            seqs = read_fasta(io.StringIO(text), policy)
        results = analyze_sequences(seqs, request.rho, request.k,
                                    request.all_lengths, request.threads)
    except InputError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err
    except InternalConsistencyError as err:
        raise HTTPException(status_code=500, detail=str(err)) from err
    if request.mark_palindromes:
        results = [(seq_id, mark_palindromes(words))
                   for seq_id, words in results]
    return results


def create_app() -> FastAPI:
    app = FastAPI(
        title="avoided-words",
        description="Words whose observed count falls short of the "
                    "Markov estimate from their longest proper prefix, "
                    "suffix and infix counts.")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/analyze", response_model=AnalyzeResponse,
              response_model_exclude_none=True)
    def analyze(request: AnalyzeRequest) -> AnalyzeResponse:
        results = _analyze(request)
        blocks = []
        for seq_id, words in results:
            rows = []
            for row in words:
                w, palin = row if isinstance(row, tuple) else (row, None)
                rows.append(WordOut(word=w.word, length=len(w.word),
                                    word_class=w.word_class, f=w.stats.f,
                                    expected=w.stats.expected,
                                    std=w.stats.std, palindrome=palin))
            blocks.append(SequenceOut(id=seq_id, words=rows))
        return AnalyzeResponse(results=blocks)

    @app.post("/report", response_class=PlainTextResponse)
    def report(request: AnalyzeRequest) -> str:
        results = _analyze(request)
        buffer = io.StringIO()
        write_report(results, buffer, request.precision)
        return buffer.getvalue()

    return app


def entry() -> None:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="avoided-words-server")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run(create_app(), host=args.host, port=args.port)
