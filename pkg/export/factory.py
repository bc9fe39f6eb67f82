"""
Export Format Factory - picks the serializer or parser for each kind of artifact
"""

from typing import Any, Callable, Dict

from export.dag_text import export_dag, import_dag
from export.eol_text import export_eol, import_eol
from export.graph_text import read_graph, write_graph
from export.proof_text import parse_proof, render_proof
from export.report_text import export_stats_csv


class FormatFactory:
    """
    Central lookup of text formats by artifact kind
    Keeps the command line free of format-specific imports
    """

    WRITERS: Dict[str, Callable[[Any], str]] = {
        'proof': render_proof,
        'eol': export_eol,
        'dag': export_dag,
        'graph': write_graph,
        'stats': export_stats_csv,
    }

    READERS: Dict[str, Callable[[str], Any]] = {
        'proof': parse_proof,
        'eol': import_eol,
        'dag': import_dag,
        'graph': read_graph,
    }

    @staticmethod
    def writer(kind: str) -> Callable[[Any], str]:
        """
        Serializer for an artifact kind

        Args:
            kind: 'proof', 'eol', 'dag', 'graph' or 'stats'

        Returns:
            Function rendering the artifact to text
        """
        try:
            return FormatFactory.WRITERS[kind]
        except KeyError:
            raise ValueError(f"Unknown format: {kind}") from None

    @staticmethod
    def reader(kind: str) -> Callable[[str], Any]:
        try:
            return FormatFactory.READERS[kind]
        except KeyError:
            raise ValueError(f"Unknown format: {kind}") from None

    @staticmethod
    def dump(kind: str, artifact: Any) -> str:
        return FormatFactory.writer(kind)(artifact)

    @staticmethod
    def load(kind: str, text: str) -> Any:
        return FormatFactory.reader(kind)(text)
