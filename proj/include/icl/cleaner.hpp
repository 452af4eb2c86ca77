#pragma once

#include "cleaner/algorithm.hpp"
#include "cleaner/fragmentation.hpp"
#include "cleaner/outcome.hpp"
#include "cleaner/qq.hpp"
#include "cleaner/root_view.hpp"
#include "cleaner/rules.hpp"
#include "cleaner/trace.hpp"
#include "cleaner/trace_check.hpp"
