"""
Antimagic File Parser

Uses Lark to parse graph, labeling and provenance files according to the
grammar. One LALR parser serves all three formats through its start rules.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from lark import Lark, Tree
from lark.exceptions import LarkError

logger = logging.getLogger(__name__)

START_RULES = ('graph_file', 'labeling_file', 'provenance_file')


class FormatError(Exception):
    """Raised when a file does not match its format"""
    pass


class GraphFileParser:
    """Parser for the toolkit's text formats using Lark"""

    def __init__(self, grammar_file: Optional[str] = None):
        if grammar_file is None:
            grammar_path = Path(__file__).parent.parent / 'grammar' / 'antimagic.lark'
        else:
            grammar_path = Path(grammar_file)

        with open(grammar_path, 'r', encoding='utf-8') as f:
            grammar = f.read()

        self.parser = Lark(grammar, start=list(START_RULES), parser='lalr')

    def parse(self, text: str, start: str = 'graph_file', source: str = '<string>') -> Tree:
        """Parse text as one of START_RULES"""
        if start not in START_RULES:
            raise FormatError(f"Unknown format '{start}'")
        try:
            return self.parser.parse(text, start=start)
        except LarkError as e:
            raise FormatError(f"{source}: not a valid {start.replace('_', ' ')}: {e}") from e

    def parse_file(self, filename: Union[str, Path], start: str = 'graph_file') -> Tree:
        with open(filename, 'r', encoding='utf-8') as f:
            text = f.read()
        logger.debug("parsing %s as %s", filename, start)
        return self.parse(text, start=start, source=str(filename))
