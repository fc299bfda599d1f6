"""
Línea de comandos del laboratorio.

Códigos de salida: 10 satisfacible, 20 insatisfacible, 0 éxito, 1 error de
uso o de configuración, 2 entrada inválida (incluye demostraciones rechazadas).
"""

import argparse
import logging
import sys

from src.errores import ErrorConfiguracion, ErrorEntrada, ErrorLaboratorio
from src.nucleo.dependencias import is_tight
from src.demostraciones import (
    aspt_to_tres,
    check_eres_proof,
    check_res_proof,
    check_tableau_proof,
    easpt_to_eres,
    eres_to_easpt,
    tres_to_aspt,
)
from src.familias import (
    FAMILIAS,
    add_random_redundancy,
    gen_ephp_proof,
    php_clausulas,
    php_eres_proof,
    red,
    red_star,
)
from src.puente.traducciones import to_asp, to_cnf
from src.tableau.configuracion import ALCANCES, HEURISTICAS, EngineConfig
from src.tableau.motor import solve
from src.tableau.reglas import CONJUNTOS
from . import banco
from .formatos import (
    escribir_texto,
    leer_texto,
    parse_dimacs,
    parse_program,
    parse_res_proof,
    parse_tableau_proof,
    serialize_dimacs,
    serialize_namemap,
    serialize_program,
    serialize_res_proof,
    serialize_tableau_proof,
)

logger = logging.getLogger(__name__)

SALIDA_SAT = 10
SALIDA_UNSAT = 20
SALIDA_OK = 0
SALIDA_USO = 1
SALIDA_ENTRADA = 2


class _ErrorUso(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """``error`` lanza en lugar de terminar el proceso."""

    def error(self, message):
        raise _ErrorUso(f"{self.prog}: {message}")


# ----------------------------------------------------------------------
# Utilidades
# ----------------------------------------------------------------------

def _agregar_config(parser):
    grupo = parser.add_argument_group("motor")
    grupo.add_argument("--rules", choices=sorted(CONJUNTOS), default="full")
    grupo.add_argument("--cut-scope", choices=ALCANCES, default=None,
                       help="por defecto 'atoms' para smodels y 'atoms+bodies' en otro caso")
    grupo.add_argument("--heuristic", choices=HEURISTICAS, default="lex")
    grupo.add_argument("--seed", type=int, default=0)
    grupo.add_argument("--lookahead", action="store_true")
    grupo.add_argument("--max-decisions", type=int, default=None)


def _config(args):
    cambios = dict(heuristica=args.heuristic, semilla=args.seed, lookahead=args.lookahead,
                   limite_decisiones=args.max_decisions)
    if args.cut_scope is not None:
        cambios["alcance_corte"] = args.cut_scope
    return EngineConfig.preset(args.rules, **cambios).exigir_valida()


def _leer_programa(ruta):
    return parse_program(leer_texto(ruta))


def _leer_cnf(ruta):
    return parse_dimacs(leer_texto(ruta))


def _escribir_cnf(ruta, clausulas, encabezado):
    escribir_texto(ruta, f"c {encabezado}\n" + serialize_dimacs(clausulas))


def _veredicto(veredicto):
    print(veredicto)
    return SALIDA_OK if veredicto else SALIDA_ENTRADA


# ----------------------------------------------------------------------
# Subcomandos
# ----------------------------------------------------------------------

def _cmd_solve(args):
    programa = _leer_programa(args.archivo)
    config = _config(args)
    resultado = solve(programa, None, config, todos=args.all)
    stats = resultado.stats
    print(resultado.estado)
    if args.all:
        for modelo in resultado.modelos:
            print("v " + " ".join(sorted(modelo)))
    elif resultado.satisfacible:
        print("v " + " ".join(sorted(resultado.modelo)))
    print(f"c decisions {stats.decisiones}")
    print(f"c entries {stats.entradas}")
    print(f"c lookahead_probes {stats.sondeos}")
    if resultado.prueba is not None:
        print(f"c proof_length {resultado.prueba.longitud()}")
        if args.emit_proof:
            escribir_texto(args.emit_proof, serialize_tableau_proof(resultado.prueba))
            logger.info("demostración escrita en %s", args.emit_proof)
    return SALIDA_SAT if resultado.satisfacible else SALIDA_UNSAT


def _cmd_check_proof(args):
    if args.tableau:
        programa = _leer_programa(args.entrada)
        prueba = parse_tableau_proof(leer_texto(args.prueba))
        return _veredicto(check_tableau_proof(programa, prueba.extension, prueba))
    clausulas = _leer_cnf(args.entrada)
    tripletas, prueba = parse_res_proof(leer_texto(args.prueba))
    if args.res:
        if tripletas:
            print("INVALID: la demostración declara tripletas de extensión")
            return SALIDA_ENTRADA
        return _veredicto(check_res_proof(clausulas, prueba))
    return _veredicto(check_eres_proof(clausulas, tripletas, prueba))


def _cmd_translate(args):
    if args.to_cnf:
        programa = _leer_programa(args.entrada)
        if not is_tight(programa):
            logger.warning("el programa no es ajustado: la compleción no es fiel a los modelos estables")
        clausulas, mapa = to_cnf(programa)
        _escribir_cnf(args.salida, clausulas, f"to-cnf {args.entrada}")
    else:
        programa, mapa = to_asp(_leer_cnf(args.entrada))
        escribir_texto(args.salida, serialize_program(programa, f"to-asp {args.entrada}"))
    if args.namemap:
        escribir_texto(args.namemap, serialize_namemap(mapa))
    return SALIDA_OK


def _cmd_gen(args):
    if args.familia == "addred":
        programa = add_random_redundancy(_leer_programa(args.entrada), args.n, args.p, args.seed)
        encabezado = f"addred {args.entrada} n={args.n} p={args.p} seed={args.seed}"
        escribir_texto(args.salida, serialize_program(programa, encabezado))
        return SALIDA_OK
    if args.familia == "php-cnf":
        _escribir_cnf(args.salida, php_clausulas(args.n), f"php n={args.n}")
        if args.eres_proof:
            tripletas, prueba = php_eres_proof(args.n)
            escribir_texto(args.eres_proof, serialize_res_proof(prueba, tripletas))
        return SALIDA_OK
    programa = FAMILIAS[args.familia](args.n)
    escribir_texto(args.salida, serialize_program(programa, f"{args.familia} n={args.n}"))
    if args.familia == "ephp" and args.emit_proof:
        _, prueba = gen_ephp_proof(args.n)
        escribir_texto(args.emit_proof, serialize_tableau_proof(prueba))
    return SALIDA_OK


def _cmd_simplify(args):
    programa = _leer_programa(args.entrada)
    resultado = red_star(programa) if args.red_star else red(programa)
    logger.info("%d reglas eliminadas", len(programa) - len(resultado))
    escribir_texto(args.salida, serialize_program(resultado, f"simplify {args.entrada}"))
    return SALIDA_OK


def _cmd_simulate(args):
    if args.direccion in ("aspt2tres", "easpt2eres"):
        programa = _leer_programa(args.entrada)
        prueba = parse_tableau_proof(leer_texto(args.prueba))
        if args.direccion == "aspt2tres":
            tripletas, resultado = (), aspt_to_tres(programa, prueba)
        else:
            tripletas, resultado = easpt_to_eres(programa, prueba, prueba.extension)
        escribir_texto(args.salida, serialize_res_proof(resultado, tripletas))
        if args.cnf_out:
            clausulas, _ = to_cnf(programa)
            _escribir_cnf(args.cnf_out, clausulas, f"to-cnf {args.entrada}")
        return SALIDA_OK
    clausulas = _leer_cnf(args.entrada)
    tripletas, prueba = parse_res_proof(leer_texto(args.prueba))
    if args.direccion == "tres2aspt":
        resultado = tres_to_aspt(clausulas, prueba)
    else:
        _, resultado = eres_to_easpt(clausulas, tripletas, prueba)
    escribir_texto(args.salida, serialize_tableau_proof(resultado))
    if args.program_out:
        programa, _ = to_asp(clausulas)
        escribir_texto(args.program_out, serialize_program(programa, f"to-asp {args.entrada}"))
    return SALIDA_OK


def _cmd_bench(args):
    if args.min > args.max:
        raise ErrorConfiguracion("--min no puede superar a --max")
    config = _config(args)
    resultado = banco.bench_run(
        args.family, range(args.min, args.max + 1), config,
        repeticiones=args.repeats, semilla=args.seed, timeout=args.timeout, trabajos=args.jobs,
    )
    banco.escribir_csv(args.csv, resultado.registros, con_tiempos=not args.no_times)
    if args.plotdata:
        banco.escribir_plotdata(args.plotdata, resultado.registros)
    if args.pdf:
        from .exportador_pdf import ExportadorPDF
        ExportadorPDF().exportar_banco(resultado, args.family, config, args.pdf)
    reporte = resultado.reporte
    print(f"c records {len(resultado.registros)}")
    if reporte is not None:
        print(f"c slope_log_decisions {reporte.pendiente_log_decisiones:.4f}")
        print(f"c slope_loglog_proof_length {reporte.pendiente_loglog_longitud:.4f}")
        print(f"c exponential {'yes' if reporte.exponencial else 'no'}")
        print(f"c polynomial {'yes' if reporte.polinomial else 'no'}")
    return SALIDA_OK


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def crear_parser():
    parser = _Parser(prog="laboratorio", description="Laboratorio de demostraciones ASP Tableaux")
    verbosidad = parser.add_mutually_exclusive_group()
    verbosidad.add_argument("-v", "--verbose", action="store_true")
    verbosidad.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="comando", required=True)

    p = sub.add_parser("solve", help="resolver un programa")
    p.add_argument("archivo")
    _agregar_config(p)
    p.add_argument("--all", action="store_true", help="enumerar todos los modelos")
    p.add_argument("--emit-proof", metavar="PATH")
    p.set_defaults(funcion=_cmd_solve)

    p = sub.add_parser("check-proof", help="verificar una demostración")
    sistema = p.add_mutually_exclusive_group(required=True)
    sistema.add_argument("--tableau", action="store_true")
    sistema.add_argument("--res", action="store_true")
    sistema.add_argument("--eres", action="store_true")
    p.add_argument("entrada", help="programa o CNF")
    p.add_argument("prueba")
    p.set_defaults(funcion=_cmd_check_proof)

    p = sub.add_parser("translate", help="traducir entre CNF y programas")
    direccion = p.add_mutually_exclusive_group(required=True)
    direccion.add_argument("--to-cnf", action="store_true")
    direccion.add_argument("--to-asp", action="store_true")
    p.add_argument("entrada")
    p.add_argument("salida")
    p.add_argument("--namemap", metavar="PATH")
    p.set_defaults(funcion=_cmd_translate)

    p = sub.add_parser("gen", help="generar instancias")
    familias = p.add_subparsers(dest="familia", required=True)
    for nombre in FAMILIAS:
        f = familias.add_parser(nombre)
        f.add_argument("n", type=int)
        f.add_argument("salida")
        if nombre == "ephp":
            f.add_argument("--emit-proof", metavar="PATH")
    f = familias.add_parser("php-cnf")
    f.add_argument("n", type=int)
    f.add_argument("salida")
    f.add_argument("--eres-proof", metavar="PATH")
    f = familias.add_parser("addred")
    f.add_argument("entrada")
    f.add_argument("salida")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--seed", type=int, required=True)
    p.set_defaults(funcion=_cmd_gen)

    p = sub.add_parser("simplify", help="eliminar reglas cuyas cabezas no aparecen en cuerpos")
    p.add_argument("--red-star", action="store_true", help="iterar hasta el punto fijo")
    p.add_argument("entrada")
    p.add_argument("salida")
    p.set_defaults(funcion=_cmd_simplify)

    p = sub.add_parser("simulate", help="traducir demostraciones entre sistemas")
    p.add_argument("direccion", choices=("aspt2tres", "tres2aspt", "easpt2eres", "eres2easpt"))
    p.add_argument("entrada", help="programa (aspt2tres, easpt2eres) o CNF")
    p.add_argument("prueba")
    p.add_argument("salida")
    p.add_argument("--cnf-out", metavar="PATH", help="compleción usada por la refutación")
    p.add_argument("--program-out", metavar="PATH", help="programa usado por el tableau")
    p.set_defaults(funcion=_cmd_simulate)

    p = sub.add_parser("bench", help="experimentos de escalado")
    p.add_argument("--family", choices=banco.FAMILIAS_BANCO, required=True)
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--plotdata")
    p.add_argument("--pdf")
    p.add_argument("--repeats", type=int, default=None,
                   help="por defecto 15 para addred-php y 1 en otro caso")
    p.add_argument("--timeout", type=float, default=None, help="segundos por instancia (LAB_TIMEOUT)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-times", action="store_true", help="omitir el tiempo de pared en el CSV")
    _agregar_config(p)
    p.set_defaults(funcion=_cmd_bench)
    return parser


def _configurar_logging(args):
    if args.verbose:
        nivel = logging.DEBUG
    elif args.quiet:
        nivel = logging.WARNING
    else:
        nivel = logging.INFO
    logging.basicConfig(level=nivel, format="%(levelname)s: %(message)s", force=True)


def cli_dispatch(argv):
    """Ejecuta un subcomando y devuelve el código de salida."""
    parser = crear_parser()
    try:
        args = parser.parse_args(argv)
    except _ErrorUso as exc:
        print(exc, file=sys.stderr)
        return SALIDA_USO
    _configurar_logging(args)
    if args.comando == "bench" and args.repeats is None:
        args.repeats = 15 if args.family == "addred-php" else 1
    try:
        return args.funcion(args)
    except ErrorConfiguracion as exc:
        logger.error("%s", exc)
        return SALIDA_USO
    except (ErrorEntrada, OSError) as exc:
        logger.error("%s", exc)
        return SALIDA_ENTRADA
    except ErrorLaboratorio as exc:
        logger.error("error interno: %s", exc)
        return SALIDA_ENTRADA
