import pytest

from mj2ml.lexer import LexError, TokenKind, tokenize
from mj2ml.mjast import INT_MAX


def kinds(source):
    return [(t.kind, t.lexeme) for t in tokenize(source)]


def test_simple_statement_token_stream():
    assert kinds("x = 1 + y2;") == [
        (TokenKind.IDENT, "x"),
        (TokenKind.OP, "="),
        (TokenKind.INT, "1"),
        (TokenKind.OP, "+"),
        (TokenKind.IDENT, "y2"),
        (TokenKind.PUNCT, ";"),
    ]


def test_keywords_are_not_identifiers():
    toks = tokenize("class classy if iffy")
    assert [t.kind for t in toks] == [
        TokenKind.KEYWORD, TokenKind.IDENT, TokenKind.KEYWORD, TokenKind.IDENT]


def test_length_and_main_are_keywords():
    toks = tokenize("length main String")
    assert all(t.kind == TokenKind.KEYWORD for t in toks)


def test_positions_are_one_based():
    toks = tokenize("ab\n  cd")
    assert (toks[0].line, toks[0].col) == (1, 1)
    assert (toks[1].line, toks[1].col) == (2, 3)


def test_line_comment_skipped():
    assert kinds("1 // two three\n2") == [(TokenKind.INT, "1"), (TokenKind.INT, "2")]


def test_block_comment_skipped_across_lines():
    assert kinds("1 /* a\nb */ 2") == [(TokenKind.INT, "1"), (TokenKind.INT, "2")]


def test_unterminated_block_comment_rejected():
    with pytest.raises(LexError) as err:
        tokenize("1 /* never closed")
    assert "comment" in err.value.message


def test_two_char_operator_and():
    assert kinds("a && b")[1] == (TokenKind.OP, "&&")


def test_single_ampersand_rejected():
    with pytest.raises(LexError):
        tokenize("a & b")


def test_double_equals_is_two_tokens():
    assert kinds("a == b")[1:3] == [(TokenKind.OP, "="), (TokenKind.OP, "=")]


def test_largest_literal_accepted():
    toks = tokenize(str(INT_MAX))
    assert toks[0].lexeme == str(INT_MAX)


def test_literal_past_the_63_bit_range_rejected():
    with pytest.raises(LexError) as err:
        tokenize(str(INT_MAX + 1))
    assert err.value.pos.line == 1


def test_unexpected_character_position():
    with pytest.raises(LexError) as err:
        tokenize("x = 1;\n  #")
    assert (err.value.pos.line, err.value.pos.col) == (2, 3)
