# Test the command line end to end
import os
import shutil
import sys
import tempfile

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli.app import run
from core.deduction import check, prove_identity_pair
from core.formula import Atom, parse
from core.generators import fibonacci_derivation
from export.proof_text import parse_proof, render_proof

FIGURE = '(intro "A -> C" 1 (elim "C" (elim "B" (hyp "A" 1) (hyp "A -> B")) (hyp "B -> C")))'


class TestCli:

    def setup_method(self):
        """Scratch directory for proof, graph and DAG files"""
        self.workdir = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.workdir)

    def write(self, name, text):
        path = os.path.join(self.workdir, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        return path

    def read(self, name):
        with open(os.path.join(self.workdir, name), encoding='utf-8') as handle:
            return handle.read()

    def test_parse(self, capsys):
        assert run(['parse', 'A -> (B -> C)']) == 0
        assert capsys.readouterr().out == "A -> B -> C\nsize 5 height 2\n"

    def test_parse_error(self):
        assert run(['parse', 'A ->']) == 1

    def test_usage_errors(self):
        assert run([]) == 1
        assert run(['frobnicate']) == 1
        assert run(['gen-fib']) == 1

    def test_check(self, capsys):
        path = self.write('figure.proof', FIGURE)
        assert run(['check', path]) == 0
        assert capsys.readouterr().out == "A -> B, B -> C |- A -> C\n"

    def test_check_closed_and_repeated_assumptions(self, capsys):
        greedy, liberal = prove_identity_pair()
        assert run(['check', self.write('greedy.proof', render_proof(greedy))]) == 0
        assert capsys.readouterr().out == "|- A -> A -> A\n"
        twice = '(elim "B" (hyp "A") (elim "A -> B" (hyp "A") (hyp "A -> A -> B")))'
        assert run(['check', self.write('twice.proof', twice)]) == 0
        assert capsys.readouterr().out.startswith("A (2), ")

    def test_check_rejects(self, capsys):
        _, liberal = prove_identity_pair()
        assert run(['check', self.write('liberal.proof', render_proof(liberal))]) == 2
        assert capsys.readouterr().out.startswith("rejected: non-greedy-discharge")

    def test_missing_file(self):
        assert run(['check', os.path.join(self.workdir, 'absent.proof')]) == 1

    def test_normalize(self):
        redex = ('(elim "C" (elim "B" (hyp "A") (hyp "A -> B")) '
                 '(intro "B -> C" 1 (elim "C" (hyp "B" 1) (hyp "B -> C"))))')
        path = self.write('redex.proof', redex)
        out = os.path.join(self.workdir, 'normal.proof')
        assert run(['normalize', path, '--out', out]) == 0
        normal = parse_proof(self.read('normal.proof'))
        assert render_proof(normal).count('intro') == 0
        assert check(normal).conclusion == parse("C")

    def test_gen_fib_then_check(self, capsys):
        out = os.path.join(self.workdir, 'fib.proof')
        assert run(['gen-fib', '-n', '4', '--out', out]) == 0
        assert parse_proof(self.read('fib.proof')) == fibonacci_derivation(4)
        assert run(['check', out]) == 0
        assert capsys.readouterr().out == "A1 (3), A1 -> A2 (2), A1 -> A2 -> A3, A2 -> A3 -> A4 |- A4\n"

    def test_gen_fib_expected_occurrences(self, capsys):
        assert run(['gen-fib', '-n', '6', '--expect-occ']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "level label occ expected"
        assert lines[-1] == "5 A1 8 8"
        assert len(lines) == 7

    def test_gen_fib_budget(self):
        assert run(['gen-fib', '-n', '40', '--budget', '1000']) == 4
        assert run(['gen-fib', '-n', '0']) == 1

    def test_gen_nonham(self):
        graph = self.write('edgeless.graph', "2 0\n")
        out = os.path.join(self.workdir, 'cert.proof')
        assert run(['gen-nonham', '--graph', graph, '--out', out]) == 0
        assert check(parse_proof(self.read('cert.proof'))).conclusion == Atom('q')

    def test_gen_nonham_on_hamiltonian_graph(self, capsys):
        graph = self.write('path.graph', "2 1\n2 1\n")
        assert run(['gen-nonham', '--graph', graph]) == 3
        assert capsys.readouterr().out == "hamiltonian path: 2 1\n"

    def test_gen_nonham_budget_and_bad_graph(self):
        assert run(['gen-nonham', '--graph', self.write('big.graph', "5 0\n"), '--budget', '1000']) == 4
        assert run(['gen-nonham', '--graph', self.write('bad.graph', "2 1\n1 1\n")]) == 1

    def test_export_eol_orders(self, capsys):
        path = self.write('figure.proof', FIGURE)
        assert run(['export-eol', path]) == 0
        assert "edge U * 0 000101" in capsys.readouterr().out
        order = self.write('order.txt', "order A, B, C, A -> B, B -> C, A -> C\n")
        assert run(['export-eol', path, '--order', order]) == 0
        assert "edge U * 0 000110" in capsys.readouterr().out
        short = self.write('short.txt', "order A, B, C\n")
        assert run(['export-eol', path, '--order', short]) == 1
        assert run(['export-eol', path, '--order', self.write('empty.txt', "\n")]) == 1

    def test_vacuous_discharge_needs_its_antecedent_in_the_order(self, capsys):
        path = self.write('vacuous.proof', '(intro "B -> A" 1 (hyp "A"))')
        assert run(['export-eol', path]) == 0
        assert "edge U * 0 100" in capsys.readouterr().out
        assert run(['export-eol', path, '--order', self.write('order.txt', "order A, B -> A\n")]) == 1
        assert "order does not cover: B" in capsys.readouterr().err

    def test_verify_rejects_an_undeclared_antecedent(self, capsys):
        dag = self.write('vacuous.dag', 'dag 1\norder A, B -> A\nnode 0 0 intro "B -> A" 1 1 10\n'
                                        'node 1 1 leaf "A" 10\nroot 0\n')
        assert run(['verify', dag]) == 2
        assert capsys.readouterr().out.startswith("rejected (label) at node 0")

    def test_compress_then_verify(self, capsys):
        proof = os.path.join(self.workdir, 'fib.proof')
        dag = os.path.join(self.workdir, 'fib.dag')
        assert run(['gen-fib', '-n', '12', '--intro', '--out', proof]) == 0
        assert run(['compress', proof, '--out', dag]) == 0
        capsys.readouterr()
        assert run(['verify', dag]) == 0
        assert capsys.readouterr().out == "accepted\n"

        tampered = self.read('fib.dag').replace('intro "A1 -> A12" 1 1', 'intro "A1 -> A12" 1 2')
        assert run(['verify', self.write('tampered.dag', tampered)]) == 2
        assert capsys.readouterr().out.startswith("rejected (marks) at node 0")

    def test_verify_malformed(self):
        assert run(['verify', self.write('broken.dag', "dag 1\norder A\n")]) == 1

    def test_analyze(self, capsys):
        proof = os.path.join(self.workdir, 'fib.proof')
        assert run(['gen-fib', '-n', '15', '--out', proof]) == 0
        assert run(['analyze', proof]) == 0
        out = capsys.readouterr().out
        assert out.startswith("threshold 84\n")
        assert "10 A5 89" in out
        assert out.rstrip().endswith("multiplicity 89 at level 10")

    def test_analyze_without_repetition(self, capsys):
        assert run(['analyze', self.write('figure.proof', FIGURE)]) == 0
        assert capsys.readouterr().out.rstrip().endswith("no level reaches the threshold")

    def test_budget_on_tree_commands(self):
        proof = os.path.join(self.workdir, 'fib.proof')
        assert run(['gen-fib', '-n', '10', '--out', proof]) == 0
        assert run(['compress', proof, '--budget', '100']) == 4

    def test_stats(self, capsys):
        assert run(['stats', 'fib', '2', '6']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,labels,nodes,height,max_occ,ratio"
        assert lines[1] == "2,3,3,1,1,"
        assert len(lines) == 6

    def test_stats_errors(self):
        assert run(['stats', 'fib', '6', '2']) == 1
        assert run(['stats', 'collatz', '2', '6']) == 1
        assert run(['stats', 'fib', '30', '31', '--budget', '1000']) == 4
