import logging

import pytest

from src.cli import cli_dispatch, parse_dimacs, parse_program
from src.cli.formatos import leer_texto
from src.familias import gen_php

C0 = "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n"
REFUTACION_C0 = "1 1 2 0\n2 1 -2 0\n3 -1 2 0\n4 -1 -2 0\n5 2 0 1 3\n6 -2 0 2 4\n7 0 5 6\n"
PI0 = "a :- b, not a.\nb :- c.\nc :- not b.\n"


@pytest.fixture(autouse=True)
def restaurar_logging():
    raiz = logging.getLogger()
    handlers, nivel = raiz.handlers[:], raiz.level
    yield
    raiz.handlers[:] = handlers
    raiz.setLevel(nivel)


@pytest.fixture
def escribir(tmp_path):
    def escribir_archivo(nombre, texto):
        ruta = tmp_path / nombre
        ruta.write_text(texto, encoding="utf-8")
        return str(ruta)
    return escribir_archivo


def test_solve_insatisfacible(tmp_path, capsys):
    ruta = str(tmp_path / "php2.lp")
    assert cli_dispatch(["gen", "php", "2", ruta]) == 0
    assert cli_dispatch(["solve", ruta]) == 20
    salida = capsys.readouterr().out
    assert salida.startswith("UNSAT")
    assert "c decisions" in salida
    assert "c proof_length" in salida


def test_solve_satisfacible(escribir, capsys):
    ruta = escribir("eleccion.lp", "a :- not b.\nb :- not a.\n")
    assert cli_dispatch(["solve", ruta]) == 10
    salida = capsys.readouterr().out.splitlines()
    assert salida[0] == "SAT"
    assert salida[1] in ("v a", "v b")

    assert cli_dispatch(["solve", "--all", ruta]) == 10
    modelos = [l for l in capsys.readouterr().out.splitlines() if l.startswith("v ")]
    assert sorted(modelos) == ["v a", "v b"]


def test_solve_soportado(escribir, capsys):
    ruta = escribir("pi1.lp", ":- not a.\na :- b.\nb :- a.\n")
    assert cli_dispatch(["solve", "--rules", "supported", ruta]) == 10
    assert cli_dispatch(["solve", "--rules", "full", ruta]) == 20


def test_demostracion_emitida_y_verificada(escribir, tmp_path, capsys):
    programa = escribir("pi0.lp", PI0)
    prueba = str(tmp_path / "pi0.proof")
    assert cli_dispatch(["solve", programa, "--emit-proof", prueba]) == 20
    capsys.readouterr()
    assert cli_dispatch(["check-proof", "--tableau", programa, prueba]) == 0
    assert capsys.readouterr().out.strip() == "VALID"

    lineas = leer_texto(prueba).splitlines()
    recortada = escribir("recortada.proof", "\n".join(lineas[:-1]) + "\n")
    assert cli_dispatch(["check-proof", "--tableau", programa, recortada]) == 2
    assert capsys.readouterr().out.startswith("INVALID")


def test_check_proof_resolucion(escribir, capsys):
    cnf = escribir("c0.cnf", C0)
    prueba = escribir("c0.res", REFUTACION_C0)
    assert cli_dispatch(["check-proof", "--res", cnf, prueba]) == 0
    assert cli_dispatch(["check-proof", "--eres", cnf, prueba]) == 0
    mala = escribir("mala.res", REFUTACION_C0.replace("5 2 0 1 3", "5 1 0 1 3"))
    assert cli_dispatch(["check-proof", "--res", cnf, mala]) == 2


def test_palomar_extendido(tmp_path, capsys):
    cnf, prueba = str(tmp_path / "php.cnf"), str(tmp_path / "php.eres")
    assert cli_dispatch(["gen", "php-cnf", "2", cnf, "--eres-proof", prueba]) == 0
    assert cli_dispatch(["check-proof", "--eres", cnf, prueba]) == 0
    capsys.readouterr()
    assert cli_dispatch(["check-proof", "--res", cnf, prueba]) == 2
    assert "INVALID" in capsys.readouterr().out


def test_translate(escribir, tmp_path):
    programa = escribir("pi0.lp", PI0)
    cnf, mapa = str(tmp_path / "pi0.cnf"), str(tmp_path / "pi0.map")
    assert cli_dispatch(["translate", "--to-cnf", programa, cnf, "--namemap", mapa]) == 0
    assert len(parse_dimacs(leer_texto(cnf))) == 13
    assert "x@atom:a" in leer_texto(mapa)

    entrada = escribir("c0.cnf", C0)
    salida = str(tmp_path / "c0.lp")
    assert cli_dispatch(["translate", "--to-asp", entrada, salida]) == 0
    assert len(parse_program(leer_texto(salida))) == 16


def test_gen_addred_y_simplify(tmp_path):
    php, redundante, simple = (str(tmp_path / n) for n in ("php.lp", "addred.lp", "simple.lp"))
    assert cli_dispatch(["gen", "php", "3", php]) == 0
    assert cli_dispatch(["gen", "addred", php, redundante, "--n", "10", "--p", "200", "--seed", "3"]) == 0
    assert len(parse_program(leer_texto(redundante))) == len(gen_php(3)) + 20
    assert cli_dispatch(["simplify", "--red-star", redundante, simple]) == 0
    assert parse_program(leer_texto(simple)).rules == gen_php(3).rules


def test_gen_ephp_con_demostracion(tmp_path, capsys):
    programa, prueba, php = (str(tmp_path / n) for n in ("ephp.lp", "ephp.proof", "php.lp"))
    assert cli_dispatch(["gen", "ephp", "2", programa, "--emit-proof", prueba]) == 0
    assert cli_dispatch(["gen", "php", "2", php]) == 0
    assert cli_dispatch(["check-proof", "--tableau", php, prueba]) == 0


def test_simulate(escribir, tmp_path, capsys):
    cnf = escribir("c0.cnf", C0)
    refutacion = escribir("c0.res", REFUTACION_C0)
    tableau, programa = str(tmp_path / "c0.proof"), str(tmp_path / "c0.lp")
    assert cli_dispatch(["simulate", "tres2aspt", cnf, refutacion, tableau, "--program-out", programa]) == 0
    assert cli_dispatch(["check-proof", "--tableau", programa, tableau]) == 0

    vuelta, completado = str(tmp_path / "vuelta.res"), str(tmp_path / "vuelta.cnf")
    assert cli_dispatch(["simulate", "aspt2tres", programa, tableau, vuelta, "--cnf-out", completado]) == 0
    assert cli_dispatch(["check-proof", "--res", completado, vuelta]) == 0


def test_bench(tmp_path, capsys):
    csv, datos = str(tmp_path / "php.csv"), str(tmp_path / "php.dat")
    codigo = cli_dispatch([
        "bench", "--family", "php", "--min", "3", "--max", "7",
        "--csv", csv, "--plotdata", datos, "--timeout", "0.5", "--no-times",
    ])
    assert codigo == 0
    lineas = leer_texto(csv).splitlines()
    assert lineas[0] == "# bench-csv v1"
    assert lineas[1].startswith("family,n,preset,seed,result")
    assert len(lineas) == 2 + 5
    assert "c records 5" in capsys.readouterr().out
    assert leer_texto(datos).startswith("# n ")


def test_opcion_desconocida(capsys):
    assert cli_dispatch(["solve", "--sin-opcion", "x.lp"]) == 1
    assert cli_dispatch([]) == 1


def test_configuracion_invalida(escribir):
    ruta = escribir("pi0.lp", PI0)
    assert cli_dispatch(["solve", "--rules", "smodels", "--cut-scope", "atoms+bodies", ruta]) == 1
    assert cli_dispatch(["bench", "--family", "php", "--min", "5", "--max", "3", "--csv", "x.csv"]) == 1


def test_entrada_invalida(escribir, tmp_path):
    assert cli_dispatch(["solve", str(tmp_path / "no-existe.lp")]) == 2
    ruta = escribir("malo.lp", "a :- .\n")
    assert cli_dispatch(["solve", ruta]) == 2
    cnf = escribir("malo.cnf", "p cnf 1 1\n3 0\n")
    assert cli_dispatch(["translate", "--to-asp", cnf, str(tmp_path / "x.lp")]) == 2
    programa = escribir("pi0.lp", PI0)
    prueba = escribir("mala.proof", "n x - F ⊥ root - -\n")
    assert cli_dispatch(["check-proof", "--tableau", programa, prueba]) == 2
