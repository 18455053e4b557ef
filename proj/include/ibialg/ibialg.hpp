#pragma once

#include "algebra.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "lincomb.hpp"
#include "matrix.hpp"
#include "prelie.hpp"
#include "scalar.hpp"
#include "selector.hpp"
#include "text.hpp"
#include "verify.hpp"
#include "word.hpp"
