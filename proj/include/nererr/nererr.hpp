#pragma once

#include "nererr/corpus.hpp"
#include "nererr/error.hpp"
#include "nererr/labels.hpp"
#include "nererr/lint.hpp"
#include "nererr/metrics.hpp"
#include "nererr/percent.hpp"
#include "nererr/report.hpp"
#include "nererr/span.hpp"
#include "nererr/taxonomy.hpp"
#include "nererr/unicode.hpp"
