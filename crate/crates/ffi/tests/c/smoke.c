/* Copyright 2026 The stabilizer-locality Authors. Licensed under the Apache License, Version 2.0. */

#include <stdio.h>
#include <string.h>

#include "stabloc.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
              stabloc_last_error_message());                         \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  StablocCode *toric = NULL;
  CHECK(stabloc_code_toric(3, &toric) == STABLOC_STATUS_OK);
  CHECK(stabloc_code_qubits(toric) == 18);
  CHECK(stabloc_code_logical_qubits(toric) == 2);

  StablocReport *report = NULL;
  CHECK(stabloc_classify_region(toric, "toric:Qx", &report) == STABLOC_STATUS_OK);
  StablocCounts c;
  CHECK(stabloc_report_counts(report, &c) == STABLOC_STATUS_OK);
  CHECK(c.g_a == 2 && c.g_b == 2 && c.m_ab == 2 && c.m_phi == 2);

  char *json = NULL;
  CHECK(stabloc_report_json(report, &json) == STABLOC_STATUS_OK);
  CHECK(strstr(json, "\"mPhi\":2") != NULL);
  stabloc_string_free(json);
  stabloc_report_free(report);

  size_t far[] = {100};
  CHECK(stabloc_classify(toric, far, 1, &report) == STABLOC_STATUS_PARAMETER_ERROR);
  CHECK(strlen(stabloc_last_error_message()) > 0);
  stabloc_code_free(toric);

  StablocCode *rep = NULL;
  CHECK(stabloc_code_from_text("qubits 3\nstab ZZI\nstab IZZ\n", &rep) == STABLOC_STATUS_OK);
  size_t first[] = {0};
  StablocEntropyBounds b;
  CHECK(stabloc_entropy_bounds(rep, first, 1, &b) == STABLOC_STATUS_OK);
  CHECK(b.e_min == 0.0 && b.e_max == 1.0);
  size_t d = 0;
  CHECK(stabloc_distance(rep, &d) == STABLOC_STATUS_OK && d == 1);
  stabloc_code_free(rep);

  StablocCode *bad = NULL;
  CHECK(stabloc_code_from_text("qubits 2\nstab XI\nstab ZI\n", &bad) == STABLOC_STATUS_NON_COMMUTING);
  CHECK(bad == NULL);

  puts("ok");
  return 0;
}
