# Test environment overrides of the node budget
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import DEFAULT_NODE_BUDGET, _env_budget


class TestEnvBudget:

    def test_override(self, monkeypatch):
        monkeypatch.setenv('MIMP_BUDGET', '2_000')
        assert _env_budget() == 2000

    def test_unset_or_non_positive(self, monkeypatch):
        monkeypatch.delenv('MIMP_BUDGET', raising=False)
        assert _env_budget() == DEFAULT_NODE_BUDGET
        monkeypatch.setenv('MIMP_BUDGET', '-5')
        assert _env_budget() == DEFAULT_NODE_BUDGET

    def test_malformed_value_warns_on_stderr(self, monkeypatch, capsys):
        monkeypatch.setenv('MIMP_BUDGET', 'lots')
        assert _env_budget() == DEFAULT_NODE_BUDGET
        captured = capsys.readouterr()
        assert captured.out == ''
        assert "Ignoring malformed MIMP_BUDGET='lots'" in captured.err
