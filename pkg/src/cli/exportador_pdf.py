"""
Módulo para exportar los resultados del banco a PDF usando ReportLab.
"""

import os
from datetime import datetime

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import PageBreak, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from .banco import resumen_por_p

_ESTILO_TABLA = [
    ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
    ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
    ('FONTNAME', (0, 1), (-1, -1), 'Helvetica'),
    ('FONTSIZE', (0, 0), (-1, -1), 9),
    ('TEXTCOLOR', (0, 0), (-1, -1), colors.HexColor('#333333')),
    ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#CCCCCC')),
    ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#E9ECEF')),
    ('ROWBACKGROUNDS', (0, 1), (-1, -1), [colors.white, colors.HexColor('#F8F9FA')]),
]


def _texto(valor):
    if valor is None:
        return "-"
    if isinstance(valor, float):
        return f"{valor:.1f}"
    return str(valor)


class ExportadorPDF:
    """Reporte PDF de una corrida del banco."""

    def __init__(self):
        self.estilos = getSampleStyleSheet()
        self._configurar_estilos()

    def _configurar_estilos(self):
        self.estilos.add(ParagraphStyle(
            name='TituloPrincipal',
            parent=self.estilos['Heading1'],
            fontSize=24,
            spaceAfter=30,
            alignment=TA_CENTER,
            textColor=colors.HexColor('#2B2B2B')
        ))
        self.estilos.add(ParagraphStyle(
            name='Subtitulo',
            parent=self.estilos['Heading2'],
            fontSize=16,
            spaceAfter=12,
            spaceBefore=20,
            textColor=colors.HexColor('#404040')
        ))
        self.estilos.add(ParagraphStyle(
            name='TextoNormal',
            parent=self.estilos['Normal'],
            fontSize=10,
            spaceAfter=6,
            textColor=colors.HexColor('#666666')
        ))

    def exportar_banco(self, resultado, familia, config, ruta_archivo=None):
        """
        Exporta los registros y el reporte de escalado.

        Args:
            resultado: ``ResultadoBanco`` devuelto por ``bench_run``
            familia: nombre de la familia
            config: ``EngineConfig`` usada
            ruta_archivo: ruta del PDF (opcional)

        Returns:
            str: Ruta del archivo generado
        """
        if ruta_archivo is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            ruta_archivo = f"reporte_banco_{familia}_{timestamp}.pdf"

        directorio = os.path.dirname(ruta_archivo)
        if directorio and not os.path.exists(directorio):
            os.makedirs(directorio)

        doc = SimpleDocTemplate(
            ruta_archivo,
            pagesize=A4,
            rightMargin=72,
            leftMargin=72,
            topMargin=72,
            bottomMargin=18
        )
        contenido = []
        contenido.extend(self._crear_portada(resultado, familia, config))
        contenido.append(PageBreak())
        contenido.extend(self._crear_tabla_registros(resultado.registros))
        if any(r.p is not None for r in resultado.registros):
            contenido.append(PageBreak())
            contenido.extend(self._crear_tabla_redundancia(resultado.registros))
        doc.build(contenido)
        return ruta_archivo

    def _crear_portada(self, resultado, familia, config):
        contenido = [
            Paragraph("Reporte del Banco de Escalado", self.estilos['TituloPrincipal']),
            Spacer(1, 30),
        ]
        registros = resultado.registros
        censurados = sum(1 for r in registros if r.censurado)
        ns = sorted({r.n for r in registros})
        info_data = [
            ['Fecha', datetime.now().strftime("%d/%m/%Y %H:%M:%S")],
            ['Familia', familia],
            ['Reglas', config.reglas],
            ['Lookahead', "sí" if config.lookahead else "no"],
            ['Heurística', config.heuristica],
            ['Rango de n', f"{ns[0]}..{ns[-1]}" if ns else "-"],
            ['Ejecuciones', f"{len(registros)} ({censurados} censuradas)"],
        ]
        reporte = resultado.reporte
        if reporte is not None:
            info_data += [
                ['Pendiente ln(decisiones+1)', f"{reporte.pendiente_log_decisiones:.3f}"],
                ['Pendiente log-log longitud', f"{reporte.pendiente_loglog_longitud:.3f}"],
                ['Crecimiento exponencial', "sí" if reporte.exponencial else "no"],
                ['Longitud polinomial', "sí" if reporte.polinomial else "no"],
            ]

        info_table = Table(info_data, colWidths=[2.4 * inch, 3 * inch])
        info_table.setStyle(TableStyle([
            ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
            ('FONTNAME', (0, 0), (0, -1), 'Helvetica-Bold'),
            ('FONTNAME', (1, 0), (1, -1), 'Helvetica'),
            ('FONTSIZE', (0, 0), (-1, -1), 12),
            ('TEXTCOLOR', (0, 0), (-1, -1), colors.HexColor('#333333')),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#CCCCCC')),
            ('BACKGROUND', (0, 0), (0, -1), colors.HexColor('#F5F5F5')),
        ]))
        contenido.append(info_table)
        return contenido

    def _crear_tabla_registros(self, registros):
        contenido = [Paragraph("Ejecuciones", self.estilos['Subtitulo']), Spacer(1, 20)]
        if not registros:
            contenido.append(Paragraph("No hay ejecuciones registradas.", self.estilos['TextoNormal']))
            return contenido

        tabla_data = [['n', 'p', 'Ensayo', 'Resultado', 'Decisiones', 'Entradas', 'Longitud', 'ms']]
        for r in registros:
            tabla_data.append([_texto(v) for v in (
                r.n, r.p, r.trial, r.result, r.decisions, r.entries, r.proof_length, r.wall_millis
            )])
        tabla = Table(tabla_data, repeatRows=1)
        estilos_tabla = list(_ESTILO_TABLA)
        for i, r in enumerate(registros, 1):
            if r.censurado:
                estilos_tabla.append(('TEXTCOLOR', (0, i), (-1, i), colors.HexColor('#DC3545')))
        tabla.setStyle(TableStyle(estilos_tabla))
        contenido.append(tabla)
        return contenido

    def _crear_tabla_redundancia(self, registros):
        contenido = [Paragraph("Decisiones por porcentaje de redundancia", self.estilos['Subtitulo']), Spacer(1, 20)]
        tabla_data = [['n', 'p', 'Mediana', 'Mínimo', 'Máximo']]
        for n, p, mediana, minimo, maximo in resumen_por_p(registros):
            tabla_data.append([str(n), str(p), f"{mediana:g}", str(minimo), str(maximo)])
        tabla = Table(tabla_data, colWidths=[0.8 * inch, 0.8 * inch, 1.2 * inch, 1.2 * inch, 1.2 * inch])
        tabla.setStyle(TableStyle(_ESTILO_TABLA))
        contenido.append(tabla)
        return contenido
