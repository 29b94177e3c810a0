// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

// Umbrella header: the whole library.

#include "techlens/article.hpp"
#include "techlens/cooc.hpp"
#include "techlens/corpus_io.hpp"
#include "techlens/csv.hpp"
#include "techlens/dates.hpp"
#include "techlens/errors.hpp"
#include "techlens/extract.hpp"
#include "techlens/fetch.hpp"
#include "techlens/gexf.hpp"
#include "techlens/graph.hpp"
#include "techlens/html.hpp"
#include "techlens/layout.hpp"
#include "techlens/parallel.hpp"
#include "techlens/report.hpp"
#include "techlens/svg.hpp"
#include "techlens/techdict.hpp"
#include "techlens/text.hpp"
#include "techlens/timeseries.hpp"
#include "techlens/xml.hpp"
