#!/usr/bin/env python3
"""Regenerate the bundled miniature procurement dataset.

Fifty tables, a bit over ten thousand rows, fully cross-referenced:
purchasing documents with requisitions, receipts, invoices, accounting
documents, and change documents, plus the master and configuration tables
around them and a small order-to-cash family on the side.

The output is deterministic for a fixed seed, so the committed files can be
reproduced exactly:

    python scripts/generate_dataset.py --out src/ocelmill/data/p2p_mini
"""

from __future__ import annotations

import argparse
import csv
import json
import random
from datetime import date, timedelta
from pathlib import Path

from ocelmill.ingestion.catalog import serialize_table_catalog
from ocelmill.ingestion.model import ColumnDefinition, TableDefinition

SEED = 210

BASE_DAY = date(2021, 1, 4)


def day(offset: int) -> str:
    return (BASE_DAY + timedelta(days=offset)).isoformat()


def rand_time(rng: random.Random) -> str:
    return f"{rng.randrange(7, 19):02d}:{rng.randrange(60):02d}:{rng.randrange(60):02d}"


def amount(rng: random.Random, low: float, high: float) -> str:
    return f"{rng.uniform(low, high):.2f}"


def col(name: str, domain: str, nullable: bool = False) -> ColumnDefinition:
    return ColumnDefinition(name=name, domain=domain, nullable=nullable)


# --- table catalog ------------------------------------------------------------

def table_definitions() -> list[TableDefinition]:
    t = []

    def add(name, description, columns, keys):
        t.append(TableDefinition(
            name=name, description=description,
            columns=tuple(columns), key_columns=tuple(keys),
        ))

    # purchasing documents
    add("EKKO", "Purchasing document headers", [
        col("MANDT", "client"), col("EBELN", "document-number"),
        col("BUKRS", "code"), col("BSART", "code"),
        col("LIFNR", "identifier"), col("EKORG", "code"),
        col("EKGRP", "code"), col("WAERS", "currency"),
        col("ZTERM", "code", True), col("AEDAT", "date"),
    ], ["MANDT", "EBELN"])
    add("EKPO", "Purchasing document items", [
        col("MANDT", "client"), col("EBELN", "document-number"),
        col("EBELP", "item-number"), col("MATNR", "identifier"),
        col("WERKS", "code"), col("LGORT", "code", True),
        col("MENGE", "quantity"), col("MEINS", "unit"),
        col("NETPR", "amount"), col("BANFN", "document-number", True),
        col("BNFPO", "item-number", True), col("LOEKZ", "flag", True),
        col("AEDAT", "date"),
    ], ["MANDT", "EBELN", "EBELP"])
    add("EKPA", "Purchasing document partner functions", [
        col("MANDT", "client"), col("EBELN", "document-number"),
        col("PARVW", "code"), col("LIFNR2", "identifier"),
        col("ERDAT", "date"),
    ], ["MANDT", "EBELN", "PARVW"])
    add("EKET", "Purchasing document schedule lines", [
        col("MANDT", "client"), col("EBELN", "document-number"),
        col("EBELP", "item-number"), col("ETENR", "item-number"),
        col("EINDT", "date"), col("MENGE", "quantity"),
        col("WEMNG", "quantity", True),
    ], ["MANDT", "EBELN", "EBELP", "ETENR"])
    add("EKKN", "Purchasing document account assignments", [
        col("MANDT", "client"), col("EBELN", "document-number"),
        col("EBELP", "item-number"), col("ZEKKN", "item-number"),
        col("SAKTO", "identifier"), col("KOSTL", "identifier"),
        col("ERDAT", "date"),
    ], ["MANDT", "EBELN", "EBELP", "ZEKKN"])
    add("EBAN", "Purchase requisitions", [
        col("MANDT", "client"), col("BANFN", "document-number"),
        col("BNFPO", "item-number"), col("BSART", "code"),
        col("MATNR", "identifier"), col("WERKS", "code"),
        col("MENGE", "quantity"), col("MEINS", "unit"),
        col("BADAT", "date"), col("FRGDT", "date", True),
    ], ["MANDT", "BANFN", "BNFPO"])
    add("EKBE", "Purchasing document history", [
        col("MANDT", "client"), col("EBELN", "document-number"),
        col("EBELP", "item-number"), col("VGABE", "code"),
        col("BELNR", "document-number"), col("GJAHR", "year"),
        col("BUDAT", "date"), col("MENGE", "quantity", True),
        col("DMBTR", "amount"),
    ], ["MANDT", "EBELN", "EBELP", "VGABE", "BELNR"])
    add("RBKP", "Invoice document headers", [
        col("MANDT", "client"), col("BELNR", "document-number"),
        col("GJAHR", "year"), col("LIFNR", "identifier"),
        col("EBELN", "document-number"), col("BLDAT", "date", True),
        col("BUDAT", "date"), col("UZEIT", "time"),
        col("RMWWR", "amount"), col("WAERS", "currency"),
    ], ["MANDT", "BELNR", "GJAHR"])
    add("RSEG", "Invoice document items", [
        col("MANDT", "client"), col("BELNR", "document-number"),
        col("GJAHR", "year"), col("BUZEI", "item-number"),
        col("EBELN", "document-number"), col("EBELP", "item-number"),
        col("MATNR", "identifier", True), col("MENGE", "quantity"),
        col("WRBTR", "amount"), col("CPUDT", "date"),
    ], ["MANDT", "BELNR", "GJAHR", "BUZEI"])
    add("BKPF", "Accounting document headers", [
        col("MANDT", "client"), col("BUKRS", "code"),
        col("BELNR", "document-number"), col("GJAHR", "year"),
        col("BLART", "code"), col("BUDAT", "date"),
        col("CPUDT", "date", True), col("CPUTM", "time", True),
        col("WAERS", "currency"), col("EBELN", "document-number"),
    ], ["MANDT", "BUKRS", "BELNR", "GJAHR"])
    add("BSEG", "Accounting document line items", [
        col("MANDT", "client"), col("BUKRS", "code"),
        col("BELNR", "document-number"), col("GJAHR", "year"),
        col("BUZEI", "item-number"), col("KOART", "code"),
        col("SHKZG", "code"), col("WRBTR", "amount"),
        col("EBELN", "document-number"), col("BUDAT", "date"),
    ], ["MANDT", "BUKRS", "BELNR", "GJAHR", "BUZEI"])
    add("CDHDR", "Change document headers", [
        col("MANDT", "client"), col("OBJECTCLAS", "code"),
        col("OBJECTID", "identifier"), col("CHANGENR", "document-number"),
        col("USERNAME", "identifier"), col("UDATE", "date"),
        col("UTIME", "time"),
    ], ["MANDT", "CHANGENR"])
    add("CDPOS", "Change document items", [
        col("MANDT", "client"), col("CHANGENR", "document-number"),
        col("TABNAME", "identifier"), col("FNAME", "identifier"),
        col("VALUE_OLD", "text", True), col("VALUE_NEW", "text", True),
    ], ["MANDT", "CHANGENR", "TABNAME", "FNAME"])

    # supplier / material / customer master data
    add("LFA1", "Vendor master, general section", [
        col("MANDT", "client"), col("LIFNR", "identifier"),
        col("NAME1", "text"), col("LAND1", "code"),
        col("ORT01", "text", True), col("KTOKK", "code"),
    ], ["MANDT", "LIFNR"])
    add("LFB1", "Vendor master, company code section", [
        col("MANDT", "client"), col("LIFNR", "identifier"),
        col("BUKRS", "code"), col("AKONT", "identifier"),
        col("ZTERM", "code"),
    ], ["MANDT", "LIFNR", "BUKRS"])
    add("MARA", "Material master, general section", [
        col("MANDT", "client"), col("MATNR", "identifier"),
        col("MTART", "code"), col("MATKL", "code"),
        col("MEINS", "unit"),
    ], ["MANDT", "MATNR"])
    add("MAKT", "Material descriptions", [
        col("MANDT", "client"), col("MATNR", "identifier"),
        col("SPRAS", "code"), col("MAKTX", "text"),
    ], ["MANDT", "MATNR", "SPRAS"])
    add("MARD", "Material stock by storage location", [
        col("MANDT", "client"), col("MATNR", "identifier"),
        col("WERKS", "code"), col("LGORT", "code"),
        col("LABST", "quantity"),
    ], ["MANDT", "MATNR", "WERKS", "LGORT"])
    add("KNA1", "Customer master, general section", [
        col("MANDT", "client"), col("KUNNR", "identifier"),
        col("NAME1", "text"), col("LAND1", "code"),
        col("ORT01", "text", True),
    ], ["MANDT", "KUNNR"])
    add("KNB1", "Customer master, company code section", [
        col("MANDT", "client"), col("KUNNR", "identifier"),
        col("BUKRS", "code"), col("AKONT", "identifier"),
    ], ["MANDT", "KUNNR", "BUKRS"])
    add("SKA1", "G/L account master, chart of accounts", [
        col("MANDT", "client"), col("SAKTO", "identifier"),
        col("KTOPL", "code"), col("TXT50", "text"),
    ], ["MANDT", "SAKTO"])
    add("SKB1", "G/L account master, company code section", [
        col("MANDT", "client"), col("SAKTO", "identifier"),
        col("BUKRS", "code"), col("MITKZ", "code", True),
    ], ["MANDT", "SAKTO", "BUKRS"])
    add("CSKS", "Cost center master", [
        col("MANDT", "client"), col("KOSTL", "identifier"),
        col("BUKRS", "code"), col("VERAK", "text", True),
        col("ABTEI", "text", True),
    ], ["MANDT", "KOSTL"])
    add("EINA", "Purchasing info records, general section", [
        col("MANDT", "client"), col("INFNR", "document-number"),
        col("MATNR", "identifier"), col("LIFNR", "identifier"),
    ], ["MANDT", "INFNR"])
    add("EINE", "Purchasing info records, organizational data", [
        col("MANDT", "client"), col("INFNR", "document-number"),
        col("EKORG", "code"), col("NETPR", "amount"),
        col("WAERS", "currency", True),
    ], ["MANDT", "INFNR", "EKORG"])

    # configuration
    add("T001", "Company codes", [
        col("MANDT", "client"), col("BUKRS", "code"),
        col("BUTXT", "text"), col("LAND1", "code"),
        col("WAERS", "currency"),
    ], ["MANDT", "BUKRS"])
    add("T001W", "Plants", [
        col("MANDT", "client"), col("WERKS", "code"),
        col("NAME1", "text"), col("ORT01", "text", True),
    ], ["MANDT", "WERKS"])
    add("T001L", "Storage locations", [
        col("MANDT", "client"), col("WERKS", "code"),
        col("LGORT", "code"), col("LGOBE", "text"),
    ], ["MANDT", "WERKS", "LGORT"])
    add("T024", "Purchasing groups", [
        col("MANDT", "client"), col("EKGRP", "code"), col("EKNAM", "text"),
    ], ["MANDT", "EKGRP"])
    add("T024E", "Purchasing organizations", [
        col("MANDT", "client"), col("EKORG", "code"), col("EKOTX", "text"),
    ], ["MANDT", "EKORG"])
    add("T005", "Countries", [
        col("MANDT", "client"), col("LAND1", "code"), col("LANDX", "text"),
    ], ["MANDT", "LAND1"])
    add("T006", "Units of measure", [
        col("MANDT", "client"), col("MSEHI", "unit"), col("MSEHL", "text"),
    ], ["MANDT", "MSEHI"])
    add("T023", "Material groups", [
        col("MANDT", "client"), col("MATKL", "code"), col("WGBEZ", "text"),
    ], ["MANDT", "MATKL"])
    add("T134", "Material types", [
        col("MANDT", "client"), col("MTART", "code"), col("MTBEZ", "text"),
    ], ["MANDT", "MTART"])
    add("T003", "Accounting document types", [
        col("MANDT", "client"), col("BLART", "code"), col("LTEXT", "text"),
    ], ["MANDT", "BLART"])
    add("TCURC", "Currency codes", [
        col("MANDT", "client"), col("WAERS", "currency"), col("LTEXT", "text"),
    ], ["MANDT", "WAERS"])
    add("T052", "Terms of payment", [
        col("MANDT", "client"), col("ZTERM", "code"), col("TEXT1", "text"),
    ], ["MANDT", "ZTERM"])
    add("T077K", "Vendor account groups", [
        col("MANDT", "client"), col("KTOKK", "code"), col("TXT30", "text"),
    ], ["MANDT", "KTOKK"])
    add("T161", "Purchasing document types", [
        col("MANDT", "client"), col("BSART", "code"), col("BATXT", "text"),
    ], ["MANDT", "BSART"])
    add("TVKO", "Sales organizations", [
        col("MANDT", "client"), col("VKORG", "code"), col("VTEXT", "text"),
    ], ["MANDT", "VKORG"])
    add("TVFK", "Billing document types", [
        col("MANDT", "client"), col("FKART", "code"), col("VTEXT", "text"),
    ], ["MANDT", "FKART"])
    add("TVLK", "Delivery types", [
        col("MANDT", "client"), col("LFART", "code"), col("VTEXT", "text"),
    ], ["MANDT", "LFART"])

    # order-to-cash
    add("VBAK", "Sales document headers", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("AUART", "code"), col("KUNNR", "identifier"),
        col("VKORG", "code"), col("BUKRS", "code"),
        col("WAERK", "currency"), col("ERDAT", "date"),
        col("ERZET", "time"),
    ], ["MANDT", "VBELN"])
    add("VBAP", "Sales document items", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("POSNR", "item-number"), col("MATNR", "identifier"),
        col("WERKS", "code"), col("KWMENG", "quantity"),
        col("VRKME", "unit"), col("NETWR", "amount"),
        col("ERDAT", "date"),
    ], ["MANDT", "VBELN", "POSNR"])
    add("VBEP", "Sales document schedule lines", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("POSNR", "item-number"), col("ETENR", "item-number"),
        col("EDATU", "date"), col("WMENG", "quantity"),
    ], ["MANDT", "VBELN", "POSNR", "ETENR"])
    add("VBPA", "Sales document partner functions", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("PARVW", "code"), col("KUNNR", "identifier"),
    ], ["MANDT", "VBELN", "PARVW"])
    add("LIKP", "Outbound delivery headers", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("LFART", "code"), col("KUNNR", "identifier"),
        col("WADAT", "date"), col("ERZET", "time", True),
    ], ["MANDT", "VBELN"])
    add("LIPS", "Outbound delivery items", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("POSNR", "item-number"), col("MATNR", "identifier"),
        col("LFIMG", "quantity"), col("VRKME", "unit"),
    ], ["MANDT", "VBELN", "POSNR"])
    add("VBRK", "Billing document headers", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("FKART", "code"), col("KUNAG", "identifier"),
        col("BUKRS", "code"), col("WAERK", "currency"),
        col("FKDAT", "date"),
    ], ["MANDT", "VBELN"])
    add("VBRP", "Billing document items", [
        col("MANDT", "client"), col("VBELN", "document-number"),
        col("POSNR", "item-number"), col("MATNR", "identifier"),
        col("FKIMG", "quantity"), col("NETWR", "amount"),
    ], ["MANDT", "VBELN", "POSNR"])

    return t


RELATIONSHIPS = [
    # purchase-to-pay
    ("EKPO", ["EBELN"], "EKKO", ["EBELN"]),
    ("EKPA", ["EBELN"], "EKKO", ["EBELN"]),
    ("EKET", ["EBELN", "EBELP"], "EKPO", ["EBELN", "EBELP"]),
    ("EKKN", ["EBELN", "EBELP"], "EKPO", ["EBELN", "EBELP"]),
    ("EKPO", ["BANFN", "BNFPO"], "EBAN", ["BANFN", "BNFPO"]),
    ("EKBE", ["EBELN", "EBELP"], "EKPO", ["EBELN", "EBELP"]),
    ("RSEG", ["EBELN", "EBELP"], "EKPO", ["EBELN", "EBELP"]),
    ("RSEG", ["BELNR", "GJAHR"], "RBKP", ["BELNR", "GJAHR"]),
    ("RBKP", ["EBELN"], "EKKO", ["EBELN"]),
    ("BKPF", ["EBELN"], "EKKO", ["EBELN"]),
    ("BSEG", ["BUKRS", "BELNR", "GJAHR"], "BKPF", ["BUKRS", "BELNR", "GJAHR"]),
    ("BSEG", ["EBELN"], "EKKO", ["EBELN"]),
    ("CDPOS", ["CHANGENR"], "CDHDR", ["CHANGENR"]),
    # master data references
    ("EKKO", ["LIFNR"], "LFA1", ["LIFNR"]),
    ("EKPA", ["LIFNR2"], "LFA1", ["LIFNR"]),
    ("EKKO", ["BUKRS"], "T001", ["BUKRS"]),
    ("EKKO", ["EKGRP"], "T024", ["EKGRP"]),
    ("EKPO", ["MATNR"], "MARA", ["MATNR"]),
    ("EKPO", ["WERKS"], "T001W", ["WERKS"]),
    ("EBAN", ["MATNR"], "MARA", ["MATNR"]),
    ("EBAN", ["WERKS"], "T001W", ["WERKS"]),
    ("EBAN", ["BSART"], "T161", ["BSART"]),
    ("EKKN", ["SAKTO"], "SKA1", ["SAKTO"]),
    ("EKKN", ["KOSTL"], "CSKS", ["KOSTL"]),
    ("BKPF", ["BUKRS"], "T001", ["BUKRS"]),
    ("BKPF", ["BLART"], "T003", ["BLART"]),
    ("RBKP", ["LIFNR"], "LFA1", ["LIFNR"]),
    ("LFB1", ["LIFNR"], "LFA1", ["LIFNR"]),
    ("LFB1", ["BUKRS"], "T001", ["BUKRS"]),
    ("LFB1", ["ZTERM"], "T052", ["ZTERM"]),
    ("KNB1", ["KUNNR"], "KNA1", ["KUNNR"]),
    ("KNB1", ["BUKRS"], "T001", ["BUKRS"]),
    ("SKB1", ["SAKTO"], "SKA1", ["SAKTO"]),
    ("SKB1", ["BUKRS"], "T001", ["BUKRS"]),
    ("CSKS", ["BUKRS"], "T001", ["BUKRS"]),
    ("MAKT", ["MATNR"], "MARA", ["MATNR"]),
    ("MARD", ["MATNR"], "MARA", ["MATNR"]),
    ("MARD", ["WERKS", "LGORT"], "T001L", ["WERKS", "LGORT"]),
    ("T001L", ["WERKS"], "T001W", ["WERKS"]),
    ("EINA", ["MATNR"], "MARA", ["MATNR"]),
    ("EINA", ["LIFNR"], "LFA1", ["LIFNR"]),
    ("EINE", ["INFNR"], "EINA", ["INFNR"]),
    ("EINE", ["EKORG"], "T024E", ["EKORG"]),
    ("MARA", ["MATKL"], "T023", ["MATKL"]),
    ("MARA", ["MTART"], "T134", ["MTART"]),
    ("MARA", ["MEINS"], "T006", ["MSEHI"]),
    ("LFA1", ["LAND1"], "T005", ["LAND1"]),
    ("KNA1", ["LAND1"], "T005", ["LAND1"]),
    ("LFA1", ["KTOKK"], "T077K", ["KTOKK"]),
    ("T001", ["WAERS"], "TCURC", ["WAERS"]),
    # order-to-cash
    ("VBAP", ["VBELN"], "VBAK", ["VBELN"]),
    ("VBEP", ["VBELN", "POSNR"], "VBAP", ["VBELN", "POSNR"]),
    ("VBPA", ["VBELN"], "VBAK", ["VBELN"]),
    ("VBPA", ["KUNNR"], "KNA1", ["KUNNR"]),
    ("VBAK", ["KUNNR"], "KNA1", ["KUNNR"]),
    ("VBAK", ["BUKRS"], "T001", ["BUKRS"]),
    ("VBAK", ["VKORG"], "TVKO", ["VKORG"]),
    ("VBAP", ["MATNR"], "MARA", ["MATNR"]),
    ("LIKP", ["KUNNR"], "KNA1", ["KUNNR"]),
    ("LIKP", ["LFART"], "TVLK", ["LFART"]),
    ("LIPS", ["VBELN"], "LIKP", ["VBELN"]),
    ("LIPS", ["MATNR"], "MARA", ["MATNR"]),
    ("VBRK", ["KUNAG"], "KNA1", ["KUNNR"]),
    ("VBRK", ["BUKRS"], "T001", ["BUKRS"]),
    ("VBRK", ["FKART"], "TVFK", ["FKART"]),
    ("VBRP", ["VBELN"], "VBRK", ["VBELN"]),
]

CLASSES = [
    ("purchase_orders", "Purchase orders",
     ["EKKO", "EKPO", "EKPA", "EKET", "EKKN"], True),
    ("purchase_requisitions", "Purchase requisitions", ["EBAN"], True),
    ("invoices", "Supplier invoices", ["RBKP", "RSEG"], True),
    ("accounting_documents", "Accounting documents", ["BKPF", "BSEG"], False),
    ("sales_orders", "Sales orders", ["VBAK", "VBAP", "VBEP", "VBPA"], False),
    ("deliveries", "Outbound deliveries", ["LIKP", "LIPS"], False),
    ("billing_documents", "Customer billing documents", ["VBRK", "VBRP"], False),
    ("vendors", "Vendor master records", ["LFA1", "LFB1"], False),
    ("customers", "Customer master records", ["KNA1", "KNB1"], False),
    ("materials", "Material master records", ["MARA", "MAKT", "MARD"], False),
    ("__change_documents__", "Change documents", ["CDHDR", "CDPOS"], False),
]

MANDT = "100"

COMPANIES = [
    ("1000", "Nordwerk Industries", "DE", "EUR"),
    ("2000", "Atlantic Components", "US", "USD"),
    ("3000", "Albion Trading", "GB", "GBP"),
    ("4000", "Rheinland Fertigung", "DE", "EUR"),
    ("5000", "Helvetia Precision", "CH", "CHF"),
    ("6000", "Iberia Manufacturing", "ES", "EUR"),
    ("7000", "Lakeside Assembly", "US", "USD"),
    ("8000", "Norden Logistik", "SE", "SEK"),
]
PLANTS = [
    ("1100", "1000"), ("1200", "1000"), ("2100", "2000"), ("2200", "2000"),
    ("3100", "3000"), ("4100", "4000"), ("4200", "4000"), ("5100", "5000"),
    ("6100", "6000"), ("7100", "7000"), ("7200", "7000"), ("8100", "8000"),
]
COUNTRIES = [
    ("DE", "Germany"), ("US", "United States"), ("GB", "United Kingdom"),
    ("FR", "France"), ("IT", "Italy"), ("ES", "Spain"), ("NL", "Netherlands"),
    ("BE", "Belgium"), ("AT", "Austria"), ("CH", "Switzerland"),
    ("SE", "Sweden"), ("NO", "Norway"), ("DK", "Denmark"), ("FI", "Finland"),
    ("PL", "Poland"), ("CZ", "Czech Republic"), ("PT", "Portugal"),
    ("IE", "Ireland"), ("GR", "Greece"), ("HU", "Hungary"), ("RO", "Romania"),
    ("BG", "Bulgaria"), ("HR", "Croatia"), ("SI", "Slovenia"),
    ("SK", "Slovakia"), ("LT", "Lithuania"), ("LV", "Latvia"),
    ("EE", "Estonia"), ("LU", "Luxembourg"), ("MT", "Malta"),
]
UNITS = [
    ("EA", "Each"), ("KG", "Kilogram"), ("G", "Gram"), ("L", "Litre"),
    ("ML", "Millilitre"), ("M", "Metre"), ("CM", "Centimetre"),
    ("BOX", "Box"), ("PAL", "Pallet"), ("SET", "Set"), ("HR", "Hour"),
    ("PC", "Piece"),
]
MATERIAL_GROUPS = [(f"MG{i:02d}", label) for i, label in enumerate([
    "Fasteners", "Bearings", "Castings", "Sheet metal", "Electronics",
    "Cabling", "Hydraulics", "Pneumatics", "Lubricants", "Packaging",
    "Tooling", "Safety equipment", "Adhesives", "Gaskets", "Abrasives",
], start=1)]
MATERIAL_TYPES = [
    ("ROH", "Raw material"), ("HALB", "Semi-finished product"),
    ("FERT", "Finished product"), ("HIBE", "Operating supplies"),
    ("HAWA", "Trading goods"), ("VERP", "Packaging material"),
    ("DIEN", "Service"), ("NLAG", "Non-stock material"),
]
DOC_TYPES = [
    ("RE", "Vendor invoice"), ("KZ", "Vendor payment"), ("SA", "G/L posting"),
    ("DR", "Customer invoice"), ("DZ", "Customer payment"),
    ("AB", "Clearing document"), ("KR", "Vendor credit memo"),
    ("KG", "Vendor credit posting"), ("WE", "Goods receipt"),
    ("WA", "Goods issue"),
]
CURRENCIES = [
    ("EUR", "Euro"), ("USD", "US Dollar"), ("GBP", "Pound Sterling"),
    ("CHF", "Swiss Franc"), ("SEK", "Swedish Krona"), ("JPY", "Japanese Yen"),
    ("CAD", "Canadian Dollar"), ("AUD", "Australian Dollar"),
    ("NOK", "Norwegian Krone"), ("DKK", "Danish Krone"),
    ("PLN", "Polish Zloty"), ("CZK", "Czech Koruna"),
]
PAYMENT_TERMS = [(f"Z{i:03d}", f"Net {days} days") for i, days in enumerate(
    [0, 7, 10, 14, 21, 30, 45, 60, 90, 120], start=1)]
VENDOR_GROUPS = [
    ("KRED", "Standard vendors"), ("LIEF", "Delivery vendors"),
    ("ONCE", "One-time vendors"), ("INTR", "Intercompany vendors"),
    ("SERV", "Service providers"), ("MATL", "Material suppliers"),
    ("TRAN", "Carriers"), ("UTIL", "Utilities"),
]
PO_TYPES = [
    ("NB", "Standard purchase order"), ("FO", "Framework order"),
    ("UB", "Stock transfer order"), ("KT", "Contract"),
    ("LP", "Scheduling agreement"), ("RV", "Returns order"),
    ("SB", "Subcontracting order"), ("TB", "Transport order"),
]
SALES_ORGS = [(f"S{i:03d}", name) for i, name in enumerate([
    "Domestic sales", "Export sales", "Online sales", "Key accounts",
    "Spare parts", "Services",
], start=1)]
BILLING_TYPES = [
    ("F1", "Order-related invoice"), ("F2", "Delivery-related invoice"),
    ("F5", "Pro forma invoice"), ("F8", "Pro forma for delivery"),
    ("G2", "Credit memo"), ("L2", "Debit memo"),
]
DELIVERY_TYPES = [
    ("LF", "Outbound delivery"), ("LO", "Delivery without reference"),
    ("LR", "Returns delivery"), ("NL", "Replenishment delivery"),
    ("EL", "Inbound delivery"), ("RL", "Returns to vendor"),
]

FIRM_PREFIX = [
    "Acme", "Borealis", "Cranfield", "Delta", "Eldoria", "Fabrikat",
    "Granite", "Hansa", "Imatra", "Juno", "Kestrel", "Lindberg", "Meridian",
    "Nexus", "Orion", "Pallas", "Quantum", "Rhenus", "Solvang", "Tectona",
]
FIRM_SUFFIX = [
    "GmbH", "AG", "Ltd", "Inc", "BV", "SpA", "SA", "Oy", "AB", "KG",
]
FIRM_KIND = [
    "Steel", "Tools", "Plastics", "Electric", "Logistics", "Packaging",
    "Machining", "Components", "Chemicals", "Systems",
]
CITIES = [
    "Hamburg", "Munich", "Chicago", "Boston", "Leeds", "Lyon", "Milan",
    "Valencia", "Rotterdam", "Antwerp", "Vienna", "Zurich", "Gothenburg",
    "Oslo", "Aarhus", "Tampere", "Gdansk", "Brno", "Porto", "Cork",
]
USERS = [
    "AMEYER", "BKLEIN", "CSTROM", "DPATEL", "EFISCHER", "FGARCIA",
    "GHANSEN", "HIKEDA", "JMUELLER", "KNOVAK", "LSILVA", "MWEBER",
]
MATERIAL_NOUNS = [
    "Hex bolt", "Flange", "Bearing", "Bracket", "Coupling", "Gasket",
    "Valve", "Sensor", "Relay", "Cable drum", "Pump", "Filter", "Seal kit",
    "Shaft", "Housing", "Spring", "Clamp", "Washer", "Connector", "Switch",
]
MATERIAL_SPECS = [
    "M8", "M12", "DN40", "DN50", "A2", "V4A", "24V", "230V", "IP65",
    "PN16", "1/2 in", "3/4 in", "type B", "type C", "HD", "XL",
]


def generate(rng: random.Random) -> dict[str, list[dict]]:
    rows: dict[str, list[dict]] = {}

    def emit(table: str, row: dict) -> None:
        row["MANDT"] = MANDT
        rows.setdefault(table, []).append(row)

    # --- configuration tables
    for bukrs, name, land, waers in COMPANIES:
        emit("T001", {"BUKRS": bukrs, "BUTXT": name, "LAND1": land, "WAERS": waers})
    for werks, bukrs in PLANTS:
        city = rng.choice(CITIES)
        emit("T001W", {"WERKS": werks, "NAME1": f"Plant {city}",
                       "ORT01": city if rng.random() > 0.1 else None})
    storage_locations = []
    for werks, _ in PLANTS:
        for lgort in ("0001", "0002")[: 1 + (rng.random() < 0.7)]:
            label = "Central store" if lgort == "0001" else "Overflow store"
            emit("T001L", {"WERKS": werks, "LGORT": lgort, "LGOBE": label})
            storage_locations.append((werks, lgort))
    while len(rows["T001L"]) < 20:
        werks, _ = rng.choice(PLANTS)
        lgort = f"{len(rows['T001L']):04d}"
        emit("T001L", {"WERKS": werks, "LGORT": lgort, "LGOBE": "Annex store"})
        storage_locations.append((werks, lgort))
    for i in range(10):
        emit("T024", {"EKGRP": f"{i + 1:03d}", "EKNAM": f"Purchasing group {i + 1:02d}"})
    for i in range(6):
        emit("T024E", {"EKORG": f"O{i + 1:03d}", "EKOTX": f"Purchasing org {i + 1:02d}"})
    for land, name in COUNTRIES:
        emit("T005", {"LAND1": land, "LANDX": name})
    for unit, name in UNITS:
        emit("T006", {"MSEHI": unit, "MSEHL": name})
    for matkl, name in MATERIAL_GROUPS:
        emit("T023", {"MATKL": matkl, "WGBEZ": name})
    for mtart, name in MATERIAL_TYPES:
        emit("T134", {"MTART": mtart, "MTBEZ": name})
    for blart, name in DOC_TYPES:
        emit("T003", {"BLART": blart, "LTEXT": name})
    for waers, name in CURRENCIES:
        emit("TCURC", {"WAERS": waers, "LTEXT": name})
    for zterm, name in PAYMENT_TERMS:
        emit("T052", {"ZTERM": zterm, "TEXT1": name})
    for ktokk, name in VENDOR_GROUPS:
        emit("T077K", {"KTOKK": ktokk, "TXT30": name})
    for bsart, name in PO_TYPES:
        emit("T161", {"BSART": bsart, "BATXT": name})
    for vkorg, name in SALES_ORGS:
        emit("TVKO", {"VKORG": vkorg, "VTEXT": name})
    for fkart, name in BILLING_TYPES:
        emit("TVFK", {"FKART": fkart, "VTEXT": name})
    for lfart, name in DELIVERY_TYPES:
        emit("TVLK", {"LFART": lfart, "VTEXT": name})

    # --- master data
    vendors = [f"{100001 + i}" for i in range(60)]
    for lifnr in vendors:
        name = (f"{rng.choice(FIRM_PREFIX)} {rng.choice(FIRM_KIND)} "
                f"{rng.choice(FIRM_SUFFIX)}")
        emit("LFA1", {
            "LIFNR": lifnr, "NAME1": name,
            "LAND1": rng.choice(COUNTRIES)[0],
            "ORT01": rng.choice(CITIES) if rng.random() > 0.1 else None,
            "KTOKK": rng.choice(VENDOR_GROUPS)[0],
        })
    lfb1_pairs = [(lifnr, rng.choice(COMPANIES)[0]) for lifnr in vendors]
    extra = rng.sample(vendors, 10)
    for lifnr in extra:
        used = {b for v, b in lfb1_pairs if v == lifnr}
        free = [c[0] for c in COMPANIES if c[0] not in used]
        lfb1_pairs.append((lifnr, rng.choice(free)))
    for lifnr, bukrs in sorted(lfb1_pairs):
        emit("LFB1", {"LIFNR": lifnr, "BUKRS": bukrs, "AKONT": "160000",
                      "ZTERM": rng.choice(PAYMENT_TERMS)[0]})

    materials = [f"M-{i + 1:04d}" for i in range(120)]
    for matnr in materials:
        emit("MARA", {
            "MATNR": matnr,
            "MTART": rng.choice(["ROH", "ROH", "HALB", "HIBE", "HAWA"]),
            "MATKL": rng.choice(MATERIAL_GROUPS)[0],
            "MEINS": rng.choice(["EA", "EA", "EA", "KG", "L", "M", "PC"]),
        })
        emit("MAKT", {
            "MATNR": matnr, "SPRAS": "EN",
            "MAKTX": f"{rng.choice(MATERIAL_NOUNS)} {rng.choice(MATERIAL_SPECS)}",
        })
    seen_mard = set()
    while len(seen_mard) < 100:
        matnr = rng.choice(materials)
        werks, lgort = rng.choice(storage_locations)
        if (matnr, werks, lgort) in seen_mard:
            continue
        seen_mard.add((matnr, werks, lgort))
        emit("MARD", {"MATNR": matnr, "WERKS": werks, "LGORT": lgort,
                      "LABST": str(rng.randrange(0, 5000))})
    rows["MARD"].sort(key=lambda r: (r["MATNR"], r["WERKS"], r["LGORT"]))

    customers = [f"{200001 + i}" for i in range(80)]
    for kunnr in customers:
        name = (f"{rng.choice(FIRM_PREFIX)} {rng.choice(FIRM_KIND)} "
                f"{rng.choice(FIRM_SUFFIX)}")
        emit("KNA1", {
            "KUNNR": kunnr, "NAME1": name,
            "LAND1": rng.choice(COUNTRIES)[0],
            "ORT01": rng.choice(CITIES) if rng.random() > 0.15 else None,
        })
    knb1_pairs = sorted((kunnr, rng.choice(COMPANIES)[0])
                        for kunnr in rng.sample(customers, 70))
    for kunnr, bukrs in knb1_pairs:
        emit("KNB1", {"KUNNR": kunnr, "BUKRS": bukrs, "AKONT": "140000"})

    accounts = [f"{400000 + i}" for i in range(40)]
    for sakto in accounts:
        emit("SKA1", {"SAKTO": sakto, "KTOPL": "INT",
                      "TXT50": f"Expense account {sakto}"})
    for sakto in accounts:
        emit("SKB1", {"SAKTO": sakto, "BUKRS": rng.choice(COMPANIES)[0],
                      "MITKZ": None if rng.random() > 0.2 else "K"})

    cost_centers = [f"{4100 + i}" for i in range(25)]
    departments = ["Maintenance", "Production", "Quality", "Facilities", "IT"]
    for kostl in cost_centers:
        emit("CSKS", {
            "KOSTL": kostl, "BUKRS": rng.choice(COMPANIES)[0],
            "VERAK": rng.choice(USERS).title() if rng.random() > 0.2 else None,
            "ABTEI": rng.choice(departments) if rng.random() > 0.2 else None,
        })

    info_records = [f"{5300000001 + i}" for i in range(60)]
    for infnr in info_records:
        emit("EINA", {"INFNR": infnr, "MATNR": rng.choice(materials),
                      "LIFNR": rng.choice(vendors)})
    eine_pairs = [(infnr, "O001") for infnr in info_records]
    for infnr in rng.sample(info_records, 10):
        eine_pairs.append((infnr, "O002"))
    for infnr, ekorg in sorted(eine_pairs):
        emit("EINE", {"INFNR": infnr, "EKORG": ekorg,
                      "NETPR": amount(rng, 5, 900),
                      "WAERS": rng.choice(["EUR", "USD", None])})

    # --- purchase requisitions
    requisitions = []
    for i in range(500):
        banfn = f"{10000001 + i}"
        badat = rng.randrange(0, 300)
        matnr = rng.choice(materials)
        requisitions.append({
            "BANFN": banfn, "BNFPO": "00010", "BSART": "NB",
            "MATNR": matnr, "WERKS": rng.choice(PLANTS)[0],
            "MENGE": str(rng.randrange(1, 400)), "MEINS": "EA",
            "BADAT": day(badat),
            "FRGDT": day(badat + rng.randrange(1, 5)) if rng.random() > 0.25 else None,
        })
    for req in requisitions:
        emit("EBAN", dict(req))

    # --- purchase orders
    pos = []
    for i in range(300):
        bukrs, _, _, waers = COMPANIES[rng.randrange(len(COMPANIES))]
        pos.append({
            "EBELN": f"{4500000001 + i}",
            "BUKRS": bukrs,
            "BSART": rng.choice(["NB"] * 17 + ["FO", "UB", "KT"]),
            "LIFNR": rng.choice(vendors),
            "EKORG": rng.choice([f"O{k + 1:03d}" for k in range(6)]),
            "EKGRP": f"{rng.randrange(1, 11):03d}",
            "WAERS": waers,
            "ZTERM": rng.choice(PAYMENT_TERMS)[0] if rng.random() > 0.2 else None,
            "AEDAT": day(i * 330 // 300 + rng.randrange(0, 3)),
        })
    for po in pos:
        emit("EKKO", dict(po))

    # --- purchase order items (500 extra beyond one per order)
    item_counts = [1] * 300
    for _ in range(500):
        item_counts[rng.randrange(300)] += 1
    unused_reqs = list(range(500))
    rng.shuffle(unused_reqs)
    items = []
    for po_index, po in enumerate(pos):
        po_day = (date.fromisoformat(po["AEDAT"]) - BASE_DAY).days
        for n in range(item_counts[po_index]):
            use_req = unused_reqs and rng.random() < 0.62
            req = requisitions[unused_reqs.pop()] if use_req else None
            matnr = req["MATNR"] if req else rng.choice(materials)
            item = {
                "EBELN": po["EBELN"], "EBELP": f"{(n + 1) * 10:05d}",
                "MATNR": matnr,
                "WERKS": req["WERKS"] if req else rng.choice(PLANTS)[0],
                "LGORT": rng.choice(["0001", "0002"]) if rng.random() > 0.3 else None,
                "MENGE": req["MENGE"] if req else str(rng.randrange(1, 400)),
                "MEINS": "EA",
                "NETPR": amount(rng, 2, 950),
                "BANFN": req["BANFN"] if req else None,
                "BNFPO": req["BNFPO"] if req else None,
                "LOEKZ": "L" if rng.random() < 0.04 else None,
                "AEDAT": day(po_day + rng.randrange(0, 2)),
                "_po": po_index, "_day": po_day,
            }
            items.append(item)
    for item in items:
        emit("EKPO", {k: v for k, v in item.items() if not k.startswith("_")})

    po_items: dict[int, list[int]] = {}
    for idx, item in enumerate(items):
        po_items.setdefault(item["_po"], []).append(idx)

    # --- partner functions
    for po in pos:
        emit("EKPA", {"EBELN": po["EBELN"], "PARVW": "VN",
                      "LIFNR2": po["LIFNR"], "ERDAT": po["AEDAT"]})
    for po in (pos[i] for i in range(0, 300, 5)):
        other = rng.choice([v for v in vendors if v != po["LIFNR"]])
        emit("EKPA", {"EBELN": po["EBELN"], "PARVW": "RS",
                      "LIFNR2": other, "ERDAT": po["AEDAT"]})

    # --- schedule lines and account assignments over a 650-item subset
    eket_items = sorted(rng.sample(range(len(items)), 650))
    for idx in eket_items:
        item = items[idx]
        emit("EKET", {
            "EBELN": item["EBELN"], "EBELP": item["EBELP"], "ETENR": "0001",
            "EINDT": day(item["_day"] + rng.randrange(7, 35)),
            "MENGE": item["MENGE"],
            "WEMNG": item["MENGE"] if rng.random() > 0.35 else
                     (str(rng.randrange(0, int(item["MENGE"]) + 1))
                      if rng.random() > 0.3 else None),
        })
    ekkn_items = sorted(rng.sample(range(len(items)), 650))
    for idx in ekkn_items:
        item = items[idx]
        emit("EKKN", {
            "EBELN": item["EBELN"], "EBELP": item["EBELP"], "ZEKKN": "01",
            "SAKTO": rng.choice(accounts), "KOSTL": rng.choice(cost_centers),
            "ERDAT": item["AEDAT"],
        })

    # --- goods receipt history (invoice receipts appended after invoicing)
    gr_items = sorted(rng.sample(range(len(items)), 500))
    for k, idx in enumerate(gr_items):
        item = items[idx]
        emit("EKBE", {
            "EBELN": item["EBELN"], "EBELP": item["EBELP"], "VGABE": "GOODS",
            "BELNR": f"{5000000001 + k}", "GJAHR": "2021",
            "BUDAT": day(item["_day"] + rng.randrange(8, 40)),
            "MENGE": item["MENGE"] if rng.random() > 0.1 else None,
            "DMBTR": amount(rng, 10, 9000),
        })

    # --- supplier invoices
    invoice_pos = sorted(rng.sample(range(300), 250))
    invoices = []
    for i, po_index in enumerate(invoice_pos):
        po = pos[po_index]
        po_day = (date.fromisoformat(po["AEDAT"]) - BASE_DAY).days
        budat = po_day + rng.randrange(14, 46)
        invoices.append({
            "BELNR": f"{5105600001 + i}", "GJAHR": "2021",
            "LIFNR": po["LIFNR"], "EBELN": po["EBELN"],
            "BLDAT": day(budat - rng.randrange(0, 4)) if rng.random() > 0.1 else None,
            "BUDAT": day(budat), "UZEIT": rand_time(rng),
            "WAERS": po["WAERS"], "_po": po_index, "_day": budat,
        })
    rseg_counts = [1] * 250
    for _ in range(350):
        pick = rng.randrange(250)
        limit = len(po_items[invoices[pick]["_po"]])
        if rseg_counts[pick] < limit:
            rseg_counts[pick] += 1
    rseg_rows = []
    for inv_index, inv in enumerate(invoices):
        candidates = po_items[inv["_po"]]
        chosen = rng.sample(candidates, rseg_counts[inv_index])
        total = 0.0
        for n, item_idx in enumerate(sorted(chosen)):
            item = items[item_idx]
            wrbtr = amount(rng, 10, 8000)
            total += float(wrbtr)
            rseg_rows.append({
                "BELNR": inv["BELNR"], "GJAHR": "2021", "BUZEI": f"{n + 1:03d}",
                "EBELN": item["EBELN"], "EBELP": item["EBELP"],
                "MATNR": item["MATNR"] if rng.random() > 0.1 else None,
                "MENGE": item["MENGE"], "WRBTR": wrbtr,
                "CPUDT": inv["BUDAT"], "_inv": inv_index,
            })
        inv["RMWWR"] = f"{total:.2f}"
    for inv in invoices:
        emit("RBKP", {k: v for k, v in inv.items() if not k.startswith("_")})
    for row in rseg_rows:
        emit("RSEG", {k: v for k, v in row.items() if not k.startswith("_")})

    # invoice receipts mirror the first 400 invoice items
    for row in rseg_rows[:400]:
        inv = invoices[row["_inv"]]
        emit("EKBE", {
            "EBELN": row["EBELN"], "EBELP": row["EBELP"], "VGABE": "INVOICE",
            "BELNR": row["BELNR"], "GJAHR": "2021", "BUDAT": inv["BUDAT"],
            "MENGE": row["MENGE"], "DMBTR": row["WRBTR"],
        })

    # --- accounting documents: invoices posted, then payments
    bkpf_rows = []
    for i, inv in enumerate(invoices):
        po = pos[inv["_po"]]
        bkpf_rows.append({
            "BUKRS": po["BUKRS"], "BELNR": f"{1900000001 + i}", "GJAHR": "2021",
            "BLART": "RE", "BUDAT": inv["BUDAT"],
            "CPUDT": inv["BUDAT"] if rng.random() > 0.2 else None,
            "CPUTM": rand_time(rng) if rng.random() > 0.2 else None,
            "WAERS": po["WAERS"], "EBELN": po["EBELN"],
            "_lines": 2, "_total": inv["RMWWR"],
        })
    for i in range(270):
        inv = invoices[i % 250]
        po = pos[inv["_po"]]
        pay_day = inv["_day"] + rng.randrange(10, 45)
        bkpf_rows.append({
            "BUKRS": po["BUKRS"], "BELNR": f"{2000000001 + i}", "GJAHR": "2021",
            "BLART": "KZ", "BUDAT": day(pay_day),
            "CPUDT": day(pay_day) if rng.random() > 0.2 else None,
            "CPUTM": rand_time(rng) if rng.random() > 0.2 else None,
            "WAERS": po["WAERS"], "EBELN": po["EBELN"],
            "_lines": 2 if i < 180 else 1, "_total": inv["RMWWR"],
        })
    for doc in bkpf_rows:
        emit("BKPF", {k: v for k, v in doc.items() if not k.startswith("_")})
        for n in range(doc["_lines"]):
            vendor_line = n == 0
            emit("BSEG", {
                "BUKRS": doc["BUKRS"], "BELNR": doc["BELNR"], "GJAHR": "2021",
                "BUZEI": f"{n + 1:03d}",
                "KOART": "K" if vendor_line else "S",
                "SHKZG": "H" if vendor_line else "S",
                "WRBTR": doc["_total"],
                "EBELN": doc["EBELN"], "BUDAT": doc["BUDAT"],
            })

    # --- change documents
    po_fields = [
        ("EKKO", "ZTERM"), ("EKKO", "WAERS"), ("EKPO", "NETPR"),
        ("EKPO", "MENGE"), ("EKPO", "LOEKZ"), ("EKET", "EINDT"),
    ]
    req_fields = [("EBAN", "MENGE"), ("EBAN", "FRGDT"), ("EBAN", "WERKS")]
    inv_fields = [("RBKP", "RMWWR"), ("RSEG", "WRBTR"), ("RSEG", "MENGE")]
    headers = []
    for i in range(400):
        if i < 300:
            po = rng.choice(pos)
            object_class, object_id = "purchase_orders", po["EBELN"]
            base_day = (date.fromisoformat(po["AEDAT"]) - BASE_DAY).days
            pool = po_fields
        elif i < 360:
            req = rng.choice(requisitions)
            object_class, object_id = "purchase_requisitions", req["BANFN"]
            base_day = (date.fromisoformat(req["BADAT"]) - BASE_DAY).days
            pool = req_fields
        else:
            inv = rng.choice(invoices)
            object_class, object_id = "invoices", inv["BELNR"]
            base_day = inv["_day"]
            pool = inv_fields
        headers.append({
            "OBJECTCLAS": object_class, "OBJECTID": object_id,
            "CHANGENR": f"{1 + i:010d}", "USERNAME": rng.choice(USERS),
            "UDATE": day(base_day + rng.randrange(1, 50)),
            "UTIME": rand_time(rng), "_pool": pool,
        })
    for header in headers:
        emit("CDHDR", {k: v for k, v in header.items() if not k.startswith("_")})
    item_counts = [1] * 400
    for _ in range(150):
        pick = rng.randrange(400)
        if item_counts[pick] < len(headers[pick]["_pool"]):
            item_counts[pick] += 1

    def change_values(field: str) -> tuple:
        if field in ("NETPR", "WRBTR", "RMWWR"):
            return amount(rng, 2, 900), amount(rng, 2, 900)
        if field in ("MENGE",):
            return str(rng.randrange(1, 400)), str(rng.randrange(1, 400))
        if field in ("EINDT", "FRGDT"):
            return day(rng.randrange(0, 330)), day(rng.randrange(0, 330))
        if field == "ZTERM":
            return rng.choice(PAYMENT_TERMS)[0], rng.choice(PAYMENT_TERMS)[0]
        if field == "WAERS":
            return rng.choice(CURRENCIES)[0], rng.choice(CURRENCIES)[0]
        if field == "LOEKZ":
            return None, "L"
        if field == "WERKS":
            return rng.choice(PLANTS)[0], rng.choice(PLANTS)[0]
        return "old", "new"

    for index, header in enumerate(headers):
        for tabname, fname in rng.sample(header["_pool"], item_counts[index]):
            old, new = change_values(fname)
            emit("CDPOS", {
                "CHANGENR": header["CHANGENR"], "TABNAME": tabname,
                "FNAME": fname,
                "VALUE_OLD": old if rng.random() > 0.15 else None,
                "VALUE_NEW": new,
            })

    # --- order-to-cash (kept small; a second process family for exploration)
    sales_orders = []
    for i in range(180):
        bukrs, _, _, waers = COMPANIES[rng.randrange(len(COMPANIES))]
        erdat = rng.randrange(0, 320)
        sales_orders.append({
            "VBELN": f"{1000000001 + i}", "AUART": rng.choice(["TA", "TA", "ZOR"]),
            "KUNNR": rng.choice(customers),
            "VKORG": rng.choice(SALES_ORGS)[0], "BUKRS": bukrs,
            "WAERK": waers, "ERDAT": day(erdat), "ERZET": rand_time(rng),
            "_day": erdat,
        })
    for so in sales_orders:
        emit("VBAK", {k: v for k, v in so.items() if not k.startswith("_")})
        emit("VBPA", {"VBELN": so["VBELN"], "PARVW": "AG", "KUNNR": so["KUNNR"]})
    for so in rng.sample(sales_orders, 20):
        emit("VBPA", {"VBELN": so["VBELN"], "PARVW": "RE",
                      "KUNNR": rng.choice(customers)})

    so_item_counts = [1] * 180
    for _ in range(240):
        so_item_counts[rng.randrange(180)] += 1
    sales_items = []
    for so_index, so in enumerate(sales_orders):
        for n in range(so_item_counts[so_index]):
            sales_items.append({
                "VBELN": so["VBELN"], "POSNR": f"{(n + 1) * 10:06d}",
                "MATNR": rng.choice(materials), "WERKS": rng.choice(PLANTS)[0],
                "KWMENG": str(rng.randrange(1, 200)), "VRKME": "EA",
                "NETWR": amount(rng, 20, 9000), "ERDAT": so["ERDAT"],
                "_so": so_index, "_day": so["_day"],
            })
    for item in sales_items:
        emit("VBAP", {k: v for k, v in item.items() if not k.startswith("_")})
    vbep_items = sorted(rng.sample(range(len(sales_items)), 400))
    for idx in vbep_items:
        item = sales_items[idx]
        emit("VBEP", {"VBELN": item["VBELN"], "POSNR": item["POSNR"],
                      "ETENR": "0001",
                      "EDATU": day(item["_day"] + rng.randrange(3, 30)),
                      "WMENG": item["KWMENG"]})

    deliveries = []
    delivered_sos = sorted(rng.sample(range(180), 150))
    for i, so_index in enumerate(delivered_sos):
        so = sales_orders[so_index]
        deliveries.append({
            "VBELN": f"{8000000001 + i}", "LFART": "LF", "KUNNR": so["KUNNR"],
            "WADAT": day(so["_day"] + rng.randrange(4, 25)),
            "ERZET": rand_time(rng) if rng.random() > 0.2 else None,
            "_so": so_index,
        })
    items_by_so: dict[int, list[dict]] = {}
    for item in sales_items:
        items_by_so.setdefault(item["_so"], []).append(item)
    for dlv in deliveries:
        emit("LIKP", {k: v for k, v in dlv.items() if not k.startswith("_")})
        so_items = items_by_so[dlv["_so"]]
        take = min(len(so_items), rng.randrange(1, 4))
        for n, item in enumerate(so_items[:take]):
            emit("LIPS", {"VBELN": dlv["VBELN"], "POSNR": f"{(n + 1) * 10:06d}",
                          "MATNR": item["MATNR"], "LFIMG": item["KWMENG"],
                          "VRKME": "EA"})

    billing_docs = []
    billed = sorted(rng.sample(range(180), 130))
    for i, so_index in enumerate(billed):
        so = sales_orders[so_index]
        billing_docs.append({
            "VBELN": f"{9000000001 + i}", "FKART": "F2", "KUNAG": so["KUNNR"],
            "BUKRS": so["BUKRS"], "WAERK": so["WAERK"],
            "FKDAT": day(so["_day"] + rng.randrange(10, 45)), "_so": so_index,
        })
    for doc in billing_docs:
        emit("VBRK", {k: v for k, v in doc.items() if not k.startswith("_")})
        so_items = items_by_so[doc["_so"]]
        take = min(len(so_items), rng.randrange(1, 4))
        for n, item in enumerate(so_items[:take]):
            emit("VBRP", {"VBELN": doc["VBELN"], "POSNR": f"{(n + 1) * 10:06d}",
                          "MATNR": item["MATNR"], "FKIMG": item["KWMENG"],
                          "NETWR": item["NETWR"]})

    return rows


# --- extraction config shipped with the dataset --------------------------------

EXTRACTION_CONFIG = {
    "tables": {
        "EKKO": {
            "activity": {"static": "Create Purchase Order"},
            "timestamp": {"date": "AEDAT"},
            "objects": [
                {"type": "purchase_order", "keys": ["EBELN"],
                 "attributes": ["BSART", "WAERS", "EKGRP"]},
                {"type": "vendor", "keys": ["LIFNR"]},
                {"type": "company_code", "keys": ["BUKRS"]},
            ],
            "attributes": ["BSART", "EKORG"],
        },
        "EKPO": {
            "activity": {"static": "Create Purchase Order Item"},
            "timestamp": {"date": "AEDAT"},
            "objects": [
                {"type": "purchase_order_item", "keys": ["EBELN", "EBELP"],
                 "attributes": ["MENGE", "MEINS", "NETPR"]},
                {"type": "purchase_order", "keys": ["EBELN"]},
                {"type": "material", "keys": ["MATNR"]},
            ],
            "attributes": ["WERKS"],
        },
        "EKPA": {
            "activity": {"static": "Assign Partner Function"},
            "timestamp": {"date": "ERDAT"},
            "objects": [
                {"type": "purchase_order", "keys": ["EBELN"]},
                {"type": "vendor", "keys": ["LIFNR2"]},
            ],
            "attributes": ["PARVW"],
        },
        "EKET": {
            "activity": {"static": "Schedule Delivery"},
            "timestamp": {"date": "EINDT"},
            "objects": [
                {"type": "purchase_order_item", "keys": ["EBELN", "EBELP"]},
            ],
            "attributes": ["MENGE"],
        },
        "EKKN": {
            "activity": {"static": "Assign Account"},
            "timestamp": {"date": "ERDAT"},
            "objects": [
                {"type": "purchase_order_item", "keys": ["EBELN", "EBELP"]},
                {"type": "gl_account", "keys": ["SAKTO"]},
                {"type": "cost_center", "keys": ["KOSTL"]},
            ],
        },
        "EBAN": {
            "activity": {"static": "Create Purchase Requisition"},
            "timestamp": {"date": "BADAT"},
            "objects": [
                {"type": "purchase_requisition", "keys": ["BANFN"]},
                {"type": "material", "keys": ["MATNR"]},
            ],
            "attributes": ["WERKS", "MENGE"],
        },
        "EKBE": {
            "activity": {"template": "Record {VGABE} Receipt"},
            "timestamp": {"date": "BUDAT"},
            "objects": [
                {"type": "purchase_order_item", "keys": ["EBELN", "EBELP"]},
                {"type": "purchase_order", "keys": ["EBELN"]},
            ],
            "attributes": ["DMBTR"],
        },
        "RBKP": {
            "activity": {"static": "Enter Supplier Invoice"},
            "timestamp": {"date": "BUDAT", "time": "UZEIT"},
            "objects": [
                {"type": "invoice", "keys": ["BELNR"],
                 "attributes": ["RMWWR", "WAERS"]},
                {"type": "vendor", "keys": ["LIFNR"]},
                {"type": "purchase_order", "keys": ["EBELN"]},
            ],
        },
        "RSEG": {
            "activity": {"static": "Verify Invoice Item"},
            "timestamp": {"date": "CPUDT"},
            "objects": [
                {"type": "invoice", "keys": ["BELNR"]},
                {"type": "purchase_order_item", "keys": ["EBELN", "EBELP"]},
            ],
            "attributes": ["WRBTR"],
        },
        "BKPF": {
            "activity": {"static": "Post Accounting Document"},
            "timestamp": {"date": "BUDAT", "time": "CPUTM"},
            "objects": [
                {"type": "accounting_document",
                 "keys": ["BUKRS", "BELNR", "GJAHR"],
                 "attributes": ["BLART", "WAERS"]},
                {"type": "purchase_order", "keys": ["EBELN"]},
            ],
            "attributes": ["BLART"],
        },
        "BSEG": {
            "activity": {"static": "Post Line Item"},
            "timestamp": {"date": "BUDAT"},
            "objects": [
                {"type": "accounting_document",
                 "keys": ["BUKRS", "BELNR", "GJAHR"]},
                {"type": "purchase_order", "keys": ["EBELN"]},
            ],
            "attributes": ["KOART", "SHKZG", "WRBTR"],
        },
        "LFA1": {
            "objects_only": True,
            "objects": [{"type": "vendor", "keys": ["LIFNR"],
                         "attributes": ["NAME1", "LAND1"]}],
        },
        "MARA": {
            "objects_only": True,
            "objects": [{"type": "material", "keys": ["MATNR"],
                         "attributes": ["MTART", "MATKL", "MEINS"]}],
        },
        "T001": {
            "objects_only": True,
            "objects": [{"type": "company_code", "keys": ["BUKRS"],
                         "attributes": ["BUTXT", "WAERS"]}],
        },
        "T001W": {
            "objects_only": True,
            "objects": [{"type": "plant", "keys": ["WERKS"],
                         "attributes": ["NAME1"]}],
        },
        "T024": {
            "objects_only": True,
            "objects": [{"type": "purchasing_group", "keys": ["EKGRP"],
                         "attributes": ["EKNAM"]}],
        },
        "SKA1": {
            "objects_only": True,
            "objects": [{"type": "gl_account", "keys": ["SAKTO"],
                         "attributes": ["TXT50"]}],
        },
        "CSKS": {
            "objects_only": True,
            "objects": [{"type": "cost_center", "keys": ["KOSTL"],
                         "attributes": ["ABTEI"]}],
        },
    },
    "changes": {
        "header_table": "CDHDR",
        "item_table": "CDPOS",
        "pairing_keys": ["CHANGENR"],
        "timestamp": {"date": "UDATE", "time": "UTIME"},
        "object_class_column": "OBJECTCLAS",
        "object_id_column": "OBJECTID",
        "field_column": "FNAME",
        "object_types": {
            "purchase_orders": "purchase_order",
            "purchase_requisitions": "purchase_requisition",
            "invoices": "invoice",
        },
        "header_attributes": ["USERNAME"],
        "item_attributes": ["VALUE_OLD", "VALUE_NEW"],
    },
}


def write_dataset(out_dir: Path) -> dict[str, int]:
    definitions = table_definitions()
    by_name = {d.name: d for d in definitions}
    rng = random.Random(SEED)
    rows = generate(rng)

    missing = set(by_name) - set(rows)
    if missing:
        raise SystemExit(f"tables with no generated rows: {sorted(missing)}")

    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "catalog.csv").write_bytes(serialize_table_catalog(definitions))

    with (out_dir / "relationships.csv").open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["from_table", "from_columns", "to_table", "to_columns"])
        for from_table, from_cols, to_table, to_cols in RELATIONSHIPS:
            writer.writerow([from_table, "|".join(from_cols),
                             to_table, "|".join(to_cols)])

    with (out_dir / "classes.csv").open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["class_id", "label", "member_tables", "change_tracked"])
        for class_id, label, members, tracked in CLASSES:
            writer.writerow([class_id, label, "|".join(members),
                             "true" if tracked else "false"])

    rows_dir = out_dir / "rows"
    rows_dir.mkdir(exist_ok=True)
    counts = {}
    for name, definition in by_name.items():
        columns = definition.column_names
        with (rows_dir / f"{name}.csv").open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(columns)
            for row in rows[name]:
                writer.writerow(["" if row.get(c) is None else row[c]
                                 for c in columns])
        counts[name] = len(rows[name])

    (out_dir / "config.json").write_text(
        json.dumps(EXTRACTION_CONFIG, indent=2) + "\n", encoding="utf-8")
    return counts


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path,
                        default=Path("src/ocelmill/data/p2p_mini"))
    args = parser.parse_args()
    counts = write_dataset(args.out)
    total = sum(counts.values())
    print(f"{len(counts)} tables, {total} rows -> {args.out}")


if __name__ == "__main__":
    main()
