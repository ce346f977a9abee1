"""Language frontends: token classification and function-span extraction.

Every frontend provides two things: a tokenizer that classifies each token
as operator, operand, ignorable punctuation, or comment (flagging decision
points and identifiers along the way), and a function-span extractor.

Classification rules are part of the external contract because complexity
and volume numbers are only reproducible against an exact token list:

Python frontend (stdlib tokenize + ast):
  * keywords are operators, except True/False/None which are operands;
  * decision points: if, elif, for, while, and, or, except;
  * identifiers, numbers, and strings (docstrings included) are operands;
  * ( ) [ ] { } , : ; ... are ignorable; every other OP token is an operator;
  * only ``#`` comments count as comments.

C-like frontend (c, cpp, javascript, typescript, java, csharp, go):
  * keywords are operators, except true/false/null/undefined/nullptr/NULL
    which are operands;
  * decision points: if, for, while, case, catch keywords and the
    && || ? operators (?. and ?? are matched first and do not count);
  * ( ) [ ] { } , ; : are ignorable punctuation;
  * // line comments and /* */ block comments;
  * recognized function forms: ``name(args) {`` and ``function name(args) {``
    with the opening brace on the same or a following line. Anonymous and
    arrow functions are not extracted; their tokens stay with the
    enclosing span.

Fallback frontend (any unregistered language): the C-like scanner with a
minimal keyword set and ``#`` line comments added. If no function syntax is
recognized and the file contains code, the whole file becomes one
anonymous span and a warning is emitted.

Token depth tracks block nesting: indentation level for Python, enclosing
brace count for the C-like scanner (brace tokens carry the depth outside
their block).
"""

from __future__ import annotations

import ast
import io
import keyword
import re
import tokenize as py_tokenize
from dataclasses import dataclass
from enum import Enum


class TokenClass(Enum):
    OPERATOR = "operator"
    OPERAND = "operand"
    IGNORABLE = "ignorable"
    COMMENT = "comment"


@dataclass(frozen=True)
class Token:
    value: str
    cls: TokenClass
    line: int
    end_line: int
    depth: int
    decision: bool = False
    identifier: bool = False


@dataclass(frozen=True)
class FunctionSpan:
    """A function's location as reported by a frontend.

    ``nested`` marks spans lying inside another function span.
    ``whole_file`` marks the fallback's single anonymous span.
    """

    name: str
    start_line: int
    end_line: int
    arity: int
    nested: bool = False
    whole_file: bool = False


class FrontendParseError(Exception):
    """The frontend could not make sense of the file."""


# --- Python frontend -------------------------------------------------------

PYTHON_DECISION_KEYWORDS = frozenset({"if", "elif", "for", "while", "and", "or", "except"})
PYTHON_OPERAND_KEYWORDS = frozenset({"True", "False", "None"})
PYTHON_IGNORABLE_OPS = frozenset({"(", ")", "[", "]", "{", "}", ",", ":", ";", "..."})


class PythonFrontend:
    name = "python"

    def tokenize(self, text: str) -> list[Token]:
        tokens: list[Token] = []
        depth = 0
        try:
            for tok in py_tokenize.generate_tokens(io.StringIO(text).readline):
                ttype, value, (srow, _col), (erow, _ecol), _ = tok
                if ttype == py_tokenize.INDENT:
                    depth += 1
                    continue
                if ttype == py_tokenize.DEDENT:
                    depth = max(0, depth - 1)
                    continue
                if ttype in (py_tokenize.NEWLINE, py_tokenize.NL, py_tokenize.ENDMARKER):
                    continue
                if ttype == py_tokenize.COMMENT:
                    tokens.append(Token(value, TokenClass.COMMENT, srow, erow, depth))
                elif ttype == py_tokenize.NAME:
                    if keyword.iskeyword(value):
                        if value in PYTHON_OPERAND_KEYWORDS:
                            tokens.append(Token(value, TokenClass.OPERAND, srow, erow, depth))
                        else:
                            tokens.append(
                                Token(
                                    value,
                                    TokenClass.OPERATOR,
                                    srow,
                                    erow,
                                    depth,
                                    decision=value in PYTHON_DECISION_KEYWORDS,
                                )
                            )
                    else:
                        tokens.append(
                            Token(value, TokenClass.OPERAND, srow, erow, depth, identifier=True)
                        )
                elif ttype in (py_tokenize.NUMBER, py_tokenize.STRING):
                    tokens.append(Token(value, TokenClass.OPERAND, srow, erow, depth))
                elif ttype == py_tokenize.OP:
                    cls = (
                        TokenClass.IGNORABLE
                        if value in PYTHON_IGNORABLE_OPS
                        else TokenClass.OPERATOR
                    )
                    tokens.append(Token(value, cls, srow, erow, depth))
                else:
                    tokens.append(Token(value, TokenClass.IGNORABLE, srow, erow, depth))
        except (py_tokenize.TokenError, IndentationError, SyntaxError) as exc:
            raise FrontendParseError(str(exc)) from None
        return tokens

    def extract_functions(
        self, text: str, tokens: list[Token]
    ) -> tuple[list[FunctionSpan], list[str]]:
        try:
            tree = ast.parse(text)
        except (SyntaxError, ValueError, RecursionError) as exc:
            raise FrontendParseError(str(exc)) from None

        spans: list[FunctionSpan] = []

        def walk(node: ast.AST, inside_function: bool) -> None:
            for child in ast.iter_child_nodes(node):
                if isinstance(child, (ast.FunctionDef, ast.AsyncFunctionDef)):
                    spans.append(
                        FunctionSpan(
                            name=child.name,
                            start_line=child.lineno,
                            end_line=child.end_lineno or child.lineno,
                            arity=_python_arity(child.args),
                            nested=inside_function,
                        )
                    )
                    walk(child, True)
                else:
                    walk(child, inside_function)

        walk(tree, False)
        spans.sort(key=lambda s: (s.start_line, -s.end_line))
        return spans, []


def _python_arity(args: ast.arguments) -> int:
    count = len(args.posonlyargs) + len(args.args) + len(args.kwonlyargs)
    if args.vararg is not None:
        count += 1
    if args.kwarg is not None:
        count += 1
    return count


# --- C-like frontend -------------------------------------------------------

CLIKE_KEYWORDS = frozenset(
    """
    if else for while do switch case default break continue return goto try
    catch finally throw throws function var let const class struct enum union
    typedef static extern inline public private protected new delete this
    super import export package namespace using void int long short char
    float double unsigned signed bool sizeof async await yield in of
    instanceof typeof volatile register auto final abstract synchronized
    interface implements extends template operator
    """.split()
)
CLIKE_LITERAL_WORDS = frozenset({"true", "false", "null", "undefined", "nullptr", "NULL", "TRUE", "FALSE"})
CLIKE_DECISION_KEYWORDS = frozenset({"if", "for", "while", "case", "catch"})
CLIKE_DECISION_OPS = frozenset({"&&", "||", "?"})
CLIKE_PUNCT = frozenset({"(", ")", "[", "]", "{", "}", ",", ";", ":"})
CLIKE_MULTI_OPS = tuple(
    sorted(
        (
            ">>>=", "<<=", ">>=", ">>>", "===", "!==", "...", "**=", "=>",
            "->", "::", "?.", "??", "&&", "||", "++", "--", "==", "!=",
            "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
            "<<", ">>", "**",
        ),
        key=len,
        reverse=True,
    )
)
CLIKE_SINGLE_OPS = frozenset("+-*/%=<>!&|^~?.#@")

_IDENT_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")
# the [eE][+-] alternative comes first so a signed exponent stays inside
# the token; plain e5 falls through to the word-character branch
_NUMBER_RE = re.compile(r"\d(?:[eE][+-]|[\w.])*")

FALLBACK_KEYWORDS = frozenset(
    """
    if elif elsif else for while case when catch except until unless do end
    then fi esac function def return begin rescue
    """.split()
)
FALLBACK_LITERAL_WORDS = frozenset({"true", "false", "null", "nil", "none", "None", "undefined"})
FALLBACK_DECISION_KEYWORDS = frozenset(
    {"if", "elif", "elsif", "for", "while", "case", "when", "catch", "except", "until", "unless"}
)


def _scan_clike(
    text: str,
    keywords: frozenset[str],
    literal_words: frozenset[str],
    decision_keywords: frozenset[str],
    hash_comments: bool,
) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    depth = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            continue
        if text.startswith("//", i) or (hash_comments and ch == "#"):
            j = text.find("\n", i)
            if j == -1:
                j = n
            tokens.append(Token(text[i:j], TokenClass.COMMENT, line, line, depth))
            i = j
            continue
        if text.startswith("/*", i):
            j = text.find("*/", i + 2)
            end = n if j == -1 else j + 2
            segment = text[i:end]
            end_line = line + segment.count("\n")
            tokens.append(Token(segment, TokenClass.COMMENT, line, end_line, depth))
            line = end_line
            i = end
            continue
        if ch in "\"'`":
            j = i + 1
            while j < n:
                c = text[j]
                if c == "\\":
                    j += 2
                    continue
                if c == ch:
                    j += 1
                    break
                if c == "\n" and ch != "`":
                    break  # unterminated single-line literal
                j += 1
            segment = text[i:j]
            end_line = line + segment.count("\n")
            tokens.append(Token(segment, TokenClass.OPERAND, line, end_line, depth))
            line = end_line
            i = j
            continue
        if ch.isdigit():
            m = _NUMBER_RE.match(text, i)
            assert m is not None
            tokens.append(Token(m.group(), TokenClass.OPERAND, line, line, depth))
            i = m.end()
            continue
        if ch.isalpha() or ch in "_$":
            m = _IDENT_RE.match(text, i)
            assert m is not None
            word = m.group()
            if word in literal_words:
                tokens.append(Token(word, TokenClass.OPERAND, line, line, depth))
            elif word in keywords:
                tokens.append(
                    Token(
                        word,
                        TokenClass.OPERATOR,
                        line,
                        line,
                        depth,
                        decision=word in decision_keywords,
                    )
                )
            else:
                tokens.append(Token(word, TokenClass.OPERAND, line, line, depth, identifier=True))
            i = m.end()
            continue
        if ch == "{":
            tokens.append(Token("{", TokenClass.IGNORABLE, line, line, depth))
            depth += 1
            i += 1
            continue
        if ch == "}":
            depth = max(0, depth - 1)
            tokens.append(Token("}", TokenClass.IGNORABLE, line, line, depth))
            i += 1
            continue
        matched = False
        for op in CLIKE_MULTI_OPS:
            if text.startswith(op, i):
                tokens.append(
                    Token(op, TokenClass.OPERATOR, line, line, depth, decision=op in CLIKE_DECISION_OPS)
                )
                i += len(op)
                matched = True
                break
        if matched:
            continue
        if ch in CLIKE_PUNCT:
            tokens.append(Token(ch, TokenClass.IGNORABLE, line, line, depth))
            i += 1
            continue
        if ch in CLIKE_SINGLE_OPS:
            tokens.append(
                Token(ch, TokenClass.OPERATOR, line, line, depth, decision=ch in CLIKE_DECISION_OPS)
            )
            i += 1
            continue
        i += 1  # unrecognized character, skip
    return tokens


# between a parameter list and the body brace a signature may carry a
# return annotation or modifier run (": number", "throws IOException",
# "const"); these tokens end such a run without opening a body
_SIGNATURE_RUN_STOPPERS = frozenset({"(", ")", "}", ";", "=", "=>"})


def _extract_brace_functions(tokens: list[Token]) -> list[FunctionSpan]:
    """Find ``name ( params ) ... {`` shapes in a token stream.

    The name must be an identifier token directly before the open paren,
    which naturally rejects ``if (...) {`` since control words are
    keyword-operators, not identifiers. ``new Foo() {`` is skipped so
    anonymous-class instantiations do not register as functions.
    """
    code = [t for t in tokens if t.cls is not TokenClass.COMMENT]
    raw: list[tuple[int, int, FunctionSpan]] = []  # (start index, end index, span)
    for idx, tok in enumerate(code):
        if tok.value != "(" or idx == 0:
            continue
        name_tok = code[idx - 1]
        if not name_tok.identifier:
            continue
        if idx >= 2 and code[idx - 2].value == "new":
            continue
        close = _match_forward(code, idx, "(", ")")
        if close is None:
            continue
        open_idx = close + 1
        while open_idx < len(code) and code[open_idx].value not in _SIGNATURE_RUN_STOPPERS:
            if code[open_idx].value == "{":
                break
            open_idx += 1
        if open_idx >= len(code) or code[open_idx].value != "{":
            continue
        body_end = _match_forward(code, open_idx, "{", "}")
        if body_end is None:
            continue
        params = code[idx + 1 : close]
        raw.append(
            (
                idx - 1,
                body_end,
                FunctionSpan(
                    name=name_tok.value,
                    start_line=name_tok.line,
                    end_line=code[body_end].line,
                    arity=_clike_arity(params),
                ),
            )
        )
    spans: list[FunctionSpan] = []
    for i, (start, end, span) in enumerate(raw):
        nested = any(
            other_start < start and end <= other_end
            for j, (other_start, other_end, _other) in enumerate(raw)
            if j != i
        )
        spans.append(
            FunctionSpan(
                name=span.name,
                start_line=span.start_line,
                end_line=span.end_line,
                arity=span.arity,
                nested=nested,
            )
        )
    spans.sort(key=lambda s: (s.start_line, -s.end_line))
    return spans


def _match_forward(code: list[Token], open_idx: int, open_val: str, close_val: str) -> int | None:
    level = 0
    for j in range(open_idx, len(code)):
        value = code[j].value
        if value == open_val:
            level += 1
        elif value == close_val:
            level -= 1
            if level == 0:
                return j
    return None


def _clike_arity(params: list[Token]) -> int:
    if not params:
        return 0
    if len(params) == 1 and params[0].value == "void":
        return 0
    level = 0
    commas = 0
    for tok in params:
        if tok.value in "([{":
            level += 1
        elif tok.value in ")]}":
            level -= 1
        elif tok.value == "," and level == 0:
            commas += 1
    return commas + 1


class ClikeFrontend:
    name = "clike"

    def tokenize(self, text: str) -> list[Token]:
        return _scan_clike(
            text, CLIKE_KEYWORDS, CLIKE_LITERAL_WORDS, CLIKE_DECISION_KEYWORDS, hash_comments=False
        )

    def extract_functions(
        self, text: str, tokens: list[Token]
    ) -> tuple[list[FunctionSpan], list[str]]:
        return _extract_brace_functions(tokens), []


class FallbackFrontend:
    name = "fallback"

    def tokenize(self, text: str) -> list[Token]:
        return _scan_clike(
            text,
            FALLBACK_KEYWORDS,
            FALLBACK_LITERAL_WORDS,
            FALLBACK_DECISION_KEYWORDS,
            hash_comments=True,
        )

    def extract_functions(
        self, text: str, tokens: list[Token]
    ) -> tuple[list[FunctionSpan], list[str]]:
        spans = _extract_brace_functions(tokens)
        if spans:
            return spans, []
        code_tokens = [t for t in tokens if t.cls is not TokenClass.COMMENT]
        if not code_tokens:
            return [], []
        line_count = len(text.splitlines())
        span = FunctionSpan(
            name="<file>",
            start_line=1,
            end_line=line_count,
            arity=0,
            whole_file=True,
        )
        return [span], ["no function syntax recognized; whole file treated as one unit"]


# --- registry ---------------------------------------------------------------

FRONTENDS: dict[str, object] = {
    "python": PythonFrontend(),
    "clike": ClikeFrontend(),
    "fallback": FallbackFrontend(),
}

LANGUAGE_FRONTENDS = {
    "python": "python",
    "c": "clike",
    "cpp": "clike",
    "javascript": "clike",
    "typescript": "clike",
    "java": "clike",
    "csharp": "clike",
    "go": "clike",
}

EXTENSION_LANGUAGES = {
    ".py": "python",
    ".pyw": "python",
    ".c": "c",
    ".h": "c",
    ".cpp": "cpp",
    ".cc": "cpp",
    ".cxx": "cpp",
    ".hpp": "cpp",
    ".hh": "cpp",
    ".js": "javascript",
    ".mjs": "javascript",
    ".jsx": "javascript",
    ".ts": "typescript",
    ".tsx": "typescript",
    ".java": "java",
    ".cs": "csharp",
    ".go": "go",
}


def language_for_path(path: str) -> str:
    dot = path.rfind(".")
    ext = path[dot:].lower() if dot >= 0 else ""
    if ext in EXTENSION_LANGUAGES:
        return EXTENSION_LANGUAGES[ext]
    return ext.lstrip(".") or "unknown"


def frontend_for_language(language_tag: str, overrides: dict[str, str] | None = None):
    name = None
    if overrides:
        name = overrides.get(language_tag)
    if name is None:
        name = LANGUAGE_FRONTENDS.get(language_tag, "fallback")
    return FRONTENDS.get(name, FRONTENDS["fallback"])
